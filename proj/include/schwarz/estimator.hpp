#ifndef SCHWARZ_ESTIMATOR_HPP
#define SCHWARZ_ESTIMATOR_HPP

#include <variant>

#include <schwarz/generators.hpp>
#include <schwarz/series.hpp>

namespace schwarz
{

// Circle suprema at radius s:
//
//   A(s) = sup_{|z|=s} |2 z phi'(z) + 1 - phi(z)^2|,  B(s) = sup_{|z|=s} |phi'(z)|,
//
// with the angles at which they were attained.
struct RadialBound {
    double s = 0.0;
    double a_value = 0.0;
    double b_value = 0.0;
    double a_arg = 0.0;
    double b_arg = 0.0;
};

struct RadiusPair {
    double s = 0.0;
    double t = 0.0;
};

// A sampled supremum. The sampler only ever sees finitely many points, so
// the value is a lower bound of the true supremum.
struct NormEstimate {
    double value = 0.0;
    // (s, t) for N(phi), a point of the disk for the hyperbolic norm.
    std::variant<RadiusPair, cplx> witness;
    int grid_resolution = 0;
    int refinement_steps = 0;
    bool is_lower_bound = true;
};

struct CircleOptions {
    int samples = 512;
    int refine_iters = 40;
};

struct NPhiOptions {
    // Points per axis of the (lambda, t) grid, s = lambda * t.
    int grid = 256;
    // Alternating single-coordinate golden-section passes.
    int refine_iters = 40;
    CircleOptions circle{};
    // t ranges over [t_min, 1 - t_min].
    double t_min = 1e-4;
};

struct HypNormOptions {
    int radial_samples = 96;
    int angular_samples = 256;
    int refine_iters = 40;
    double r_max = 0.8;
};

RadialBound circle_sup(const GeneratorEvaluator &gen, double s, const CircleOptions &opts = {});
RadialBound circle_sup(const GeneratorSpec &spec, double s, const CircleOptions &opts = {});

// F(s, t) = (1-t^2)^2/(2t^2) A(s) + (1-t^2)(1 - s^2/t^2) B(s), 0 <= s < t < 1,
// where s is radial.s.
double f_value(const RadialBound &radial, double t);

// F(s, t) from phi(s) and phi'(s) on the positive axis. Valid for generators
// whose Q and phi' expansions have non-negative coefficients, for which the
// circle suprema sit at z = s.
double f_closed_form(const GeneratorSpec &spec, double s, double t);

// Sampled estimate of N(phi) = sup_{0<s<t<1} F(s, t).
NormEstimate n_phi(const GeneratorSpec &spec, const NPhiOptions &opts = {});

// Sampled estimate of sup_{|z| <= r_max} (1-|z|^2)^2 |S_f(z)|.
NormEstimate hyperbolic_norm(const ComplexSeries &f, const HypNormOptions &opts = {});

// Radius of the disk of attainable omega'(z) - w/z over self-maps omega of
// the disk with omega(0) = 0 and omega(z) = w, |w| <= |z|.
double dieudonne_radius(cplx z, cplx w);

} // namespace schwarz

#endif

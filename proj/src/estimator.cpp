#include <schwarz/estimator.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>
#include <vector>

#include <schwarz/errors.hpp>

#include "golden.hpp"

namespace schwarz
{

namespace
{

constexpr double two_pi = 2.0 * std::numbers::pi;

double wrap_angle(double theta)
{
    theta = std::fmod(theta, two_pi);
    return theta < 0.0 ? theta + two_pi : theta;
}

// F on the closure s <= t; s = t is the continuous boundary extension.
double f_closed_region(const RadialBound &rb, double t)
{
    const double s = rb.s;
    const double t2 = t * t;
    const double x = 1.0 - t2;
    return x * x / (2.0 * t2) * rb.a_value + x * (1.0 - s * s / t2) * rb.b_value;
}

struct SampledMax {
    double value = -1.0;
    double arg = 0.0;
};

// e^{i theta} on the sampling grid, reused across circles of equal layout.
const std::vector<cplx> &unit_points(double span, int count)
{
    thread_local std::vector<cplx> points;
    thread_local double cached_span = 0.0;
    if (cached_span != span || points.size() != static_cast<std::size_t>(count)) {
        const int denom = count - (span < two_pi ? 1 : 0);
        points.resize(static_cast<std::size_t>(count));
        for (int j = 0; j < count; ++j) {
            points[static_cast<std::size_t>(j)] = std::polar(1.0, span * j / denom);
        }
        cached_span = span;
    }
    return points;
}

// Golden-section refinement around the best sample. On a half-circle scan
// the objective is even in theta, so the bracket stays inside [0, span].
template <typename Objective>
void refine_max(SampledMax &best, Objective &&obj, double span, double step, int refine_iters)
{
    if (refine_iters > 0) {
        const bool half = span < two_pi;
        const double lo = half ? std::max(0.0, best.arg - step) : best.arg - step;
        const double hi = half ? std::min(span, best.arg + step) : best.arg + step;
        const auto [theta, v] = detail::golden_max(obj, lo, hi, refine_iters);
        // Gains at the rounding level only move the angle off a flat peak.
        if (v > best.value * (1.0 + 8.0 * std::numeric_limits<double>::epsilon())) {
            best = {v, theta};
        }
    }
    best.arg = wrap_angle(best.arg);
}

// Radial bounds keyed by s, shared between the grid scan and refinement.
class RadialCache
{
public:
    RadialCache(const GeneratorEvaluator &gen, const CircleOptions &opts) : m_gen(gen), m_opts(opts) {}

    const RadialBound &at(double s)
    {
        auto it = m_cache.find(s);
        if (it == m_cache.end()) {
            it = m_cache.emplace(s, circle_sup(m_gen, s, m_opts)).first;
        }
        return it->second;
    }

private:
    const GeneratorEvaluator &m_gen;
    CircleOptions m_opts;
    std::unordered_map<double, RadialBound> m_cache;
};

struct Candidate {
    double value = -1.0;
    double s = 0.0;
    double t = 0.0;
};

// Larger value wins; ties go to smaller t, then smaller s.
bool better(const Candidate &c, const Candidate &best)
{
    if (c.value != best.value) {
        return c.value > best.value;
    }
    return c.t != best.t ? c.t < best.t : c.s < best.s;
}

} // namespace

RadialBound circle_sup(const GeneratorEvaluator &gen, double s, const CircleOptions &opts)
{
    if (!(s >= 0.0 && s < 1.0)) {
        throw DomainError("circle radius must lie in [0, 1)");
    }
    if (opts.samples < 8) {
        throw DomainError("circle_sup needs at least 8 samples");
    }
    RadialBound rb;
    rb.s = s;
    if (s == 0.0) {
        rb.a_value = std::abs(gen.q(0.0));
        rb.b_value = std::abs(gen.phi_prime(0.0));
        return rb;
    }
    // Real coefficients: conjugate points give equal moduli.
    const bool half = gen.real_coefficients();
    const double span = half ? std::numbers::pi : two_pi;
    const int count = half ? opts.samples / 2 + 1 : opts.samples;
    const double step = two_pi / opts.samples;

    // One joint pass over the samples, then separate refinements.
    SampledMax a, b;
    const auto &units = unit_points(span, count);
    for (int j = 0; j < count; ++j) {
        const double theta = span * j / (count - (half ? 1 : 0));
        const auto [qv, dv] = gen.q_and_phi_prime(s * units[static_cast<std::size_t>(j)]);
        const double av = std::norm(qv), bv = std::norm(dv);
        if (av > a.value) {
            a = {av, theta};
        }
        if (bv > b.value) {
            b = {bv, theta};
        }
    }
    a.value = std::sqrt(a.value);
    b.value = std::sqrt(b.value);
    refine_max(a, [&](double th) { return std::abs(gen.q(std::polar(s, th))); }, span, step, opts.refine_iters);
    refine_max(b, [&](double th) { return std::abs(gen.phi_prime(std::polar(s, th))); }, span, step,
               opts.refine_iters);
    rb.a_value = a.value;
    rb.a_arg = a.arg;
    rb.b_value = b.value;
    rb.b_arg = b.arg;
    return rb;
}

RadialBound circle_sup(const GeneratorSpec &spec, double s, const CircleOptions &opts)
{
    return circle_sup(GeneratorEvaluator(spec), s, opts);
}

double f_value(const RadialBound &radial, double t)
{
    if (!(radial.s >= 0.0 && radial.s < t && t < 1.0)) {
        throw DomainError("F(s, t) requires 0 <= s < t < 1");
    }
    return f_closed_region(radial, t);
}

double f_closed_form(const GeneratorSpec &spec, double s, double t)
{
    if (spec.kind == GeneratorKind::Custom) {
        throw DomainError("the closed form of F needs a generator with non-negative Q and phi' coefficients");
    }
    if (!(s >= 0.0 && s < t && t < 1.0)) {
        throw DomainError("F(s, t) requires 0 <= s < t < 1");
    }
    const double p = phi_eval(spec, s).real();
    const double dp = phi_prime_eval(spec, s).real();
    const double t2 = t * t;
    const double x = 1.0 - t2;
    return x * x / (2.0 * t2) * (1.0 - p * p) + x * (1.0 - s) * (s + t2) / t2 * dp;
}

NormEstimate n_phi(const GeneratorSpec &spec, const NPhiOptions &opts)
{
    if (opts.grid < 16) {
        throw DomainError("n_phi needs grid >= 16");
    }
    if (opts.refine_iters < 0) {
        throw DomainError("refinement steps must be non-negative");
    }
    if (!(opts.t_min > 0.0 && opts.t_min < 0.5)) {
        throw DomainError("t_min must lie in (0, 0.5)");
    }
    const GeneratorEvaluator gen(spec);
    RadialCache cache(gen, opts.circle);

    const int g = opts.grid;
    const double t_lo = opts.t_min;
    const double t_hi = 1.0 - opts.t_min;
    const auto lambda_at = [&](int i) { return static_cast<double>(i) / (g - 1); };
    const auto t_at = [&](int j) { return t_lo + (t_hi - t_lo) * j / (g - 1); };
    const auto objective = [&](double lambda, double t) {
        const double s = lambda * t;
        return Candidate{f_closed_region(cache.at(s), t), s, t};
    };

    Candidate best;
    int best_i = 0, best_j = 0;
    for (int j = 0; j < g; ++j) {
        const double t = t_at(j);
        for (int i = 0; i < g; ++i) {
            const auto c = objective(lambda_at(i), t);
            if (better(c, best)) {
                best = c;
                best_i = i;
                best_j = j;
            }
        }
    }

    const double lam_lo = lambda_at(std::max(best_i - 1, 0));
    const double lam_hi = lambda_at(std::min(best_i + 1, g - 1));
    const double tt_lo = t_at(std::max(best_j - 1, 0));
    const double tt_hi = t_at(std::min(best_j + 1, g - 1));
    double lambda = lambda_at(best_i);
    double t = best.t;
    for (int pass = 0; pass < opts.refine_iters; ++pass) {
        Candidate c;
        if (pass % 2 == 0) {
            const auto [x, v] = detail::golden_max([&](double l) { return objective(l, t).value; }, lam_lo, lam_hi, 24);
            c = objective(x, t);
            if (c.value > best.value) {
                lambda = x;
            }
        } else {
            const auto [x, v] =
                detail::golden_max([&](double tv) { return objective(lambda, tv).value; }, tt_lo, tt_hi, 24);
            c = objective(lambda, x);
            if (c.value > best.value) {
                t = x;
            }
        }
        if (c.value > best.value) {
            best = c;
        }
    }

    NormEstimate est;
    est.value = best.value;
    est.witness = RadiusPair{best.s, best.t};
    est.grid_resolution = g;
    est.refinement_steps = opts.refine_iters;
    est.is_lower_bound = true;
    return est;
}

NormEstimate hyperbolic_norm(const ComplexSeries &f, const HypNormOptions &opts)
{
    if (opts.radial_samples < 2 || opts.angular_samples < 8) {
        throw DomainError("hyperbolic_norm needs >= 2 radial and >= 8 angular samples");
    }
    if (!(opts.r_max > 0.0 && opts.r_max < 1.0)) {
        throw DomainError("r_max must lie in (0, 1)");
    }
    const auto S = schwarzian(f);
    const bool half = S.has_real_coefficients();
    const int nr = opts.radial_samples;
    const int na = half ? opts.angular_samples / 2 + 1 : opts.angular_samples;
    const double span = half ? std::numbers::pi : two_pi;
    const double dtheta = span / (half ? na - 1 : na);
    const auto r_at = [&](int i) { return opts.r_max * i / (nr - 1); };
    const auto objective = [&](double r, double theta) {
        const double w = 1.0 - r * r;
        return w * w * std::abs(eval(S, std::polar(r, theta)));
    };

    double best = -1.0, best_r = 0.0, best_theta = 0.0;
    int best_i = 0;
    for (int i = 0; i < nr; ++i) {
        const double r = r_at(i);
        // The origin is a single point.
        const int count = i == 0 ? 1 : na;
        for (int j = 0; j < count; ++j) {
            const double theta = dtheta * j;
            const double v = objective(r, theta);
            if (v > best) {
                best = v;
                best_r = r;
                best_theta = theta;
                best_i = i;
            }
        }
    }

    const double r_lo = r_at(std::max(best_i - 1, 0));
    const double r_hi = r_at(std::min(best_i + 1, nr - 1));
    const double th_lo = best_theta - dtheta;
    const double th_hi = best_theta + dtheta;
    for (int pass = 0; pass < opts.refine_iters; ++pass) {
        if (pass % 2 == 0) {
            const auto [x, v] = detail::golden_max([&](double r) { return objective(r, best_theta); }, r_lo, r_hi, 24);
            if (v > best) {
                best = v;
                best_r = x;
            }
        } else {
            const auto [x, v] =
                detail::golden_max([&](double th) { return objective(best_r, th); }, th_lo, th_hi, 24);
            if (v > best) {
                best = v;
                best_theta = x;
            }
        }
    }

    NormEstimate est;
    est.value = best;
    est.witness = std::polar(best_r, wrap_angle(best_theta));
    est.grid_resolution = nr;
    est.refinement_steps = opts.refine_iters;
    est.is_lower_bound = true;
    return est;
}

double dieudonne_radius(cplx z, cplx w)
{
    const double t = std::abs(z);
    if (!(t > 0.0 && t < 1.0) || std::abs(w) > t) {
        throw DomainError("Dieudonne's disk needs 0 < |z| < 1 and |w| <= |z|");
    }
    return (t * t - std::norm(w)) / (t * (1.0 - t * t));
}

} // namespace schwarz

#ifndef SCHWARZ_GENERATORS_HPP
#define SCHWARZ_GENERATORS_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <schwarz/series.hpp>

namespace schwarz
{

enum class GeneratorKind { StronglyConvex, UniformlyConvex, HalfPlane, Custom };

// Selects the function phi (phi(0) = 1) that defines the class K(phi) of
// normalized f with 1 + z f''/f' subordinate to phi.
//
// - StronglyConvex: ((1+z)/(1-z))^alpha, 0 < alpha <= 1;
// - UniformlyConvex: 1 + (2/pi^2) (log((1+sqrt z)/(1-sqrt z)))^2;
// - HalfPlane: (1 + (1-2a) z)/(1-z), 0 <= a < 1;
// - Custom: a polynomial given by its coefficients, taken as exact.
//
// Build through the named constructors, which validate the parameters.
struct GeneratorSpec {
    GeneratorKind kind = GeneratorKind::StronglyConvex;
    double alpha = 1.0;
    double a = 0.0;
    ComplexSeries custom_coeffs;

    static GeneratorSpec strongly_convex(double alpha);
    static GeneratorSpec uniformly_convex();
    static GeneratorSpec half_plane(double a);
    static GeneratorSpec custom(ComplexSeries coeffs);

    // Short human-readable label, e.g. "strongly_convex(alpha=0.5)".
    std::string describe() const;
};

cplx phi_eval(const GeneratorSpec &spec, cplx z);
cplx phi_prime_eval(const GeneratorSpec &spec, cplx z);
ComplexSeries phi_series(const GeneratorSpec &spec, std::size_t order);

// 2 z phi'(z) + 1 - phi(z)^2 as a series of the same order as phi.
ComplexSeries q_from_phi(const ComplexSeries &phi);

// G(z) = sum_n z^n / (2n+1).
cplx g_eval(cplx z);
ComplexSeries g_series(std::size_t order);

// Mocanu's order function: K_{gamma(beta)} is contained in S*_beta.
double gamma_of_beta(double beta);
double gamma_inverse(double alpha, double tol = 1e-14);

// sin(pi gamma^{-1}(alpha) / 2) - alpha.
double figure1_value(double alpha);
// Bracket [lo, hi] of width <= tol around the sign change of figure1_value
// on (0.1, 0.9).
std::pair<double, double> figure1_bracket(double tol);
double figure1_crossing(double tol);

// Fast evaluation of phi, phi' and 2 z phi' + 1 - phi^2 for repeated
// sampling. Near the origin the last quantity is taken from its Taylor
// series, which avoids the cancellation in 1 - phi^2.
class GeneratorEvaluator
{
public:
    explicit GeneratorEvaluator(GeneratorSpec spec);

    const GeneratorSpec &spec() const noexcept
    {
        return m_spec;
    }
    bool real_coefficients() const noexcept
    {
        return m_real;
    }

    cplx phi(cplx z) const;
    cplx phi_prime(cplx z) const;
    cplx q(cplx z) const;
    // {q(z), phi'(z)} sharing one evaluation of phi.
    std::pair<cplx, cplx> q_and_phi_prime(cplx z) const;

private:
    bool use_series(cplx z) const;

    GeneratorSpec m_spec;
    ComplexSeries m_phi;
    ComplexSeries m_phi_prime;
    ComplexSeries m_q;
    bool m_real = true;
    bool m_truncate = true;
    std::vector<double> m_q_real;
    std::vector<double> m_dp_real;
};

} // namespace schwarz

#endif

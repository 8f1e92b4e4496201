#include <schwarz/generators.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <schwarz/errors.hpp>

namespace schwarz
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr double ucv_scale = 8.0 / (pi * pi);

// Inside this radius the evaluator uses truncated Taylor series.
constexpr double series_radius = 0.5;
// 0.5^121 < 1e-36, ample for the generator coefficients involved.
constexpr std::size_t series_terms = 120;

void require_in_disk(cplx z)
{
    if (!(std::abs(z) < 1.0)) {
        throw DomainError("point lies outside the open unit disk");
    }
}

cplx g_series_sum(cplx z)
{
    cplx acc{}, power = 1.0;
    for (std::size_t n = 0; n < 100000u; ++n) {
        const cplx term = power / static_cast<double>(2u * n + 1u);
        acc += term;
        if (std::abs(term) < 1e-17) {
            break;
        }
        power *= z;
    }
    return acc;
}

cplx strongly_convex_eval(double alpha, cplx z)
{
    return std::exp(alpha * std::log((1.0 + z) / (1.0 - z)));
}

} // namespace

GeneratorSpec GeneratorSpec::strongly_convex(double alpha)
{
    if (!(alpha > 0.0 && alpha <= 1.0)) {
        throw DomainError("strongly convex order must lie in (0, 1]");
    }
    GeneratorSpec s;
    s.kind = GeneratorKind::StronglyConvex;
    s.alpha = alpha;
    return s;
}

GeneratorSpec GeneratorSpec::uniformly_convex()
{
    GeneratorSpec s;
    s.kind = GeneratorKind::UniformlyConvex;
    return s;
}

GeneratorSpec GeneratorSpec::half_plane(double a)
{
    if (!(a >= 0.0 && a < 1.0)) {
        throw DomainError("half-plane order must lie in [0, 1)");
    }
    GeneratorSpec s;
    s.kind = GeneratorKind::HalfPlane;
    s.a = a;
    return s;
}

GeneratorSpec GeneratorSpec::custom(ComplexSeries coeffs)
{
    if (coeffs[0] != cplx{1.0, 0.0}) {
        throw DomainError("custom generator must satisfy phi(0) = 1");
    }
    GeneratorSpec s;
    s.kind = GeneratorKind::Custom;
    s.custom_coeffs = std::move(coeffs);
    return s;
}

std::string GeneratorSpec::describe() const
{
    std::ostringstream os;
    switch (kind) {
        case GeneratorKind::StronglyConvex:
            os << "strongly_convex(alpha=" << alpha << ")";
            break;
        case GeneratorKind::UniformlyConvex:
            os << "uniformly_convex";
            break;
        case GeneratorKind::HalfPlane:
            os << "half_plane(a=" << a << ")";
            break;
        case GeneratorKind::Custom:
            os << "custom(degree=" << custom_coeffs.order() << ")";
            break;
    }
    return os.str();
}

cplx g_eval(cplx z)
{
    require_in_disk(z);
    if (std::abs(z) <= 0.5) {
        return g_series_sum(z);
    }
    // atanh(w)/w is even in w, so either square root gives the same value.
    const cplx w = std::sqrt(z);
    return std::atanh(w) / w;
}

ComplexSeries g_series(std::size_t order)
{
    std::vector<cplx> v(order + 1u);
    for (std::size_t n = 0; n <= order; ++n) {
        v[n] = 1.0 / static_cast<double>(2u * n + 1u);
    }
    return ComplexSeries(std::move(v));
}

cplx phi_eval(const GeneratorSpec &spec, cplx z)
{
    require_in_disk(z);
    switch (spec.kind) {
        case GeneratorKind::StronglyConvex:
            return strongly_convex_eval(spec.alpha, z);
        case GeneratorKind::UniformlyConvex: {
            const cplx g = g_eval(z);
            return 1.0 + ucv_scale * z * g * g;
        }
        case GeneratorKind::HalfPlane:
            return (1.0 + (1.0 - 2.0 * spec.a) * z) / (1.0 - z);
        case GeneratorKind::Custom:
            return eval(spec.custom_coeffs, z);
    }
    return {};
}

cplx phi_prime_eval(const GeneratorSpec &spec, cplx z)
{
    require_in_disk(z);
    switch (spec.kind) {
        case GeneratorKind::StronglyConvex:
            return 2.0 * spec.alpha * strongly_convex_eval(spec.alpha, z) / (1.0 - z * z);
        case GeneratorKind::UniformlyConvex:
            return ucv_scale * g_eval(z) / (1.0 - z);
        case GeneratorKind::HalfPlane:
            return (2.0 - 2.0 * spec.a) / ((1.0 - z) * (1.0 - z));
        case GeneratorKind::Custom:
            if (spec.custom_coeffs.order() == 0u) {
                return {};
            }
            return eval(derivative(spec.custom_coeffs), z);
    }
    return {};
}

ComplexSeries phi_series(const GeneratorSpec &spec, std::size_t order)
{
    if (order == 0u) {
        throw DegenerateOrderError("generator expansions need order >= 1");
    }
    switch (spec.kind) {
        case GeneratorKind::StronglyConvex: {
            // exp(alpha log((1+z)/(1-z))), log((1+z)/(1-z)) = 2 sum z^{2n-1}/(2n-1).
            std::vector<cplx> log_ratio(order + 1u);
            for (std::size_t n = 1; n <= order; n += 2u) {
                log_ratio[n] = 2.0 / static_cast<double>(n);
            }
            return exp_series(scale(ComplexSeries(std::move(log_ratio)), spec.alpha));
        }
        case GeneratorKind::UniformlyConvex: {
            const auto g = g_series(order);
            const auto zg2 = shift_up(mul(g, g), 1u).truncated(order);
            return ComplexSeries::constant(1.0, order) + scale(zg2, ucv_scale);
        }
        case GeneratorKind::HalfPlane: {
            std::vector<cplx> v(order + 1u, cplx{2.0 - 2.0 * spec.a});
            v[0] = 1.0;
            return ComplexSeries(std::move(v));
        }
        case GeneratorKind::Custom:
            if (spec.custom_coeffs.order() >= order) {
                return spec.custom_coeffs.truncated(order);
            }
            return spec.custom_coeffs.padded(order);
    }
    return {};
}

ComplexSeries q_from_phi(const ComplexSeries &phi)
{
    const auto N = phi.order();
    const auto two_z_dphi = N == 0u ? ComplexSeries::zero(0) : scale(shift_up(derivative(phi), 1u), 2.0);
    return two_z_dphi + ComplexSeries::constant(1.0, N) - mul(phi, phi);
}

double gamma_of_beta(double beta)
{
    if (!(beta > 0.0 && beta < 1.0)) {
        throw DomainError("gamma(beta) is defined for 0 < beta < 1");
    }
    const double half_angle = pi * beta / 2.0;
    const double denom = std::pow(1.0 + beta, (1.0 + beta) / 2.0) * std::pow(1.0 - beta, (1.0 - beta) / 2.0)
                         * std::cos(half_angle);
    return 2.0 / pi * std::atan(std::tan(half_angle) + beta / denom);
}

double gamma_inverse(double alpha, double tol)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("gamma^{-1}(alpha) is defined for 0 < alpha < 1");
    }
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double g = gamma_of_beta(mid);
        if (std::abs(g - alpha) <= tol) {
            return mid;
        }
        (g < alpha ? lo : hi) = mid;
    }
    throw NumericError("gamma inverse bisection did not reach the requested tolerance");
}

double figure1_value(double alpha)
{
    return std::sin(pi * gamma_inverse(alpha) / 2.0) - alpha;
}

std::pair<double, double> figure1_bracket(double tol)
{
    if (!(tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    double lo = 0.1, hi = 0.9;
    double flo = figure1_value(lo);
    if (!(flo < 0.0 && figure1_value(hi) > 0.0)) {
        throw NumericError("no sign change of sin(pi gamma^{-1}(alpha)/2) - alpha on (0.1, 0.9)");
    }
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = figure1_value(mid);
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

double figure1_crossing(double tol)
{
    const auto [lo, hi] = figure1_bracket(tol);
    return 0.5 * (lo + hi);
}

namespace
{

// Horner over the leading terms only when truncate is set; the dropped tail
// is of size n |z|^n with |z|^n < 2^-70.
std::size_t terms_needed(double r, bool truncate, std::size_t order)
{
    if (truncate && r < 1.0 && r > 0.0) {
        const double needed = 70.0 / -std::log2(r);
        if (needed < static_cast<double>(order)) {
            return static_cast<std::size_t>(needed) + 1u;
        }
    }
    return order;
}

cplx horner(const ComplexSeries &f, cplx z, bool truncate)
{
    std::size_t n = terms_needed(std::abs(z), truncate, f.order());
    const auto &c = f.coeffs();
    cplx acc = c[n];
    while (n-- > 0u) {
        acc = acc * z + c[n];
    }
    return acc;
}

} // namespace

GeneratorEvaluator::GeneratorEvaluator(GeneratorSpec spec) : m_spec(std::move(spec))
{
    std::size_t order = series_terms;
    if (m_spec.kind == GeneratorKind::Custom) {
        // Exact polynomial: keep every coefficient of phi and of q.
        order = std::max<std::size_t>(2u * m_spec.custom_coeffs.order(), 1u);
    }
    m_phi = phi_series(m_spec, order);
    m_phi_prime = derivative(m_phi);
    m_q = q_from_phi(m_phi);
    m_real = m_phi.has_real_coefficients();
    m_truncate = m_spec.kind != GeneratorKind::Custom;
    if (m_real) {
        for (const auto &c : m_q.coeffs()) {
            m_q_real.push_back(c.real());
        }
        for (const auto &c : m_phi_prime.coeffs()) {
            m_dp_real.push_back(c.real());
        }
    }
}

bool GeneratorEvaluator::use_series(cplx z) const
{
    return m_spec.kind == GeneratorKind::Custom || std::norm(z) <= series_radius * series_radius;
}

cplx GeneratorEvaluator::phi(cplx z) const
{
    require_in_disk(z);
    return use_series(z) ? horner(m_phi, z, m_truncate) : phi_eval(m_spec, z);
}

cplx GeneratorEvaluator::phi_prime(cplx z) const
{
    require_in_disk(z);
    return use_series(z) ? horner(m_phi_prime, z, m_truncate) : phi_prime_eval(m_spec, z);
}

cplx GeneratorEvaluator::q(cplx z) const
{
    return q_and_phi_prime(z).first;
}

std::pair<cplx, cplx> GeneratorEvaluator::q_and_phi_prime(cplx z) const
{
    require_in_disk(z);
    if (use_series(z)) {
        if (!m_real) {
            return {horner(m_q, z, m_truncate), horner(m_phi_prime, z, m_truncate)};
        }
        // Two interleaved real-coefficient Horner chains.
        std::size_t n = std::min(terms_needed(std::abs(z), m_truncate, m_q.order()), m_phi_prime.order());
        const double x = z.real(), y = z.imag();
        double qr = m_q_real[n], qi = 0.0, dr = m_dp_real[n], di = 0.0;
        while (n-- > 0u) {
            const double qr2 = qr * x - qi * y + m_q_real[n];
            qi = qr * y + qi * x;
            qr = qr2;
            const double dr2 = dr * x - di * y + m_dp_real[n];
            di = dr * y + di * x;
            dr = dr2;
        }
        return {{qr, qi}, {dr, di}};
    }
    cplx p, dp;
    switch (m_spec.kind) {
        case GeneratorKind::StronglyConvex:
            p = strongly_convex_eval(m_spec.alpha, z);
            dp = 2.0 * m_spec.alpha * p / (1.0 - z * z);
            break;
        case GeneratorKind::UniformlyConvex: {
            const cplx g = g_eval(z);
            p = 1.0 + ucv_scale * z * g * g;
            dp = ucv_scale * g / (1.0 - z);
            break;
        }
        default:
            p = phi_eval(m_spec, z);
            dp = phi_prime_eval(m_spec, z);
            break;
    }
    return {2.0 * z * dp + 1.0 - p * p, dp};
}

} // namespace schwarz

#include <schwarz/series.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <schwarz/errors.hpp>

namespace schwarz
{

namespace
{

bool is_finite(cplx c)
{
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

std::size_t common_order(const ComplexSeries &a, const ComplexSeries &b)
{
    return std::min(a.order(), b.order());
}

} // namespace

ComplexSeries::ComplexSeries() : m_coeffs(1u) {}

ComplexSeries::ComplexSeries(std::vector<cplx> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw DegenerateOrderError("a series needs at least one coefficient");
    }
    for (std::size_t n = 0; n < m_coeffs.size(); ++n) {
        if (!is_finite(m_coeffs[n])) {
            throw DomainError("non-finite coefficient at index " + std::to_string(n));
        }
    }
}

ComplexSeries::ComplexSeries(std::initializer_list<cplx> coeffs) : ComplexSeries(std::vector<cplx>(coeffs)) {}

ComplexSeries ComplexSeries::zero(std::size_t order)
{
    return ComplexSeries(std::vector<cplx>(order + 1u));
}

ComplexSeries ComplexSeries::constant(cplx c, std::size_t order)
{
    std::vector<cplx> v(order + 1u);
    v[0] = c;
    return ComplexSeries(std::move(v));
}

ComplexSeries ComplexSeries::identity(std::size_t order)
{
    if (order == 0u) {
        throw DegenerateOrderError("the identity series needs order >= 1");
    }
    std::vector<cplx> v(order + 1u);
    v[1] = 1.0;
    return ComplexSeries(std::move(v));
}

ComplexSeries ComplexSeries::from_real(std::span<const double> coeffs)
{
    return ComplexSeries(std::vector<cplx>(coeffs.begin(), coeffs.end()));
}

bool ComplexSeries::has_real_coefficients() const noexcept
{
    return std::all_of(m_coeffs.begin(), m_coeffs.end(), [](cplx c) { return c.imag() == 0.0; });
}

ComplexSeries ComplexSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw DegenerateOrderError("cannot truncate to a higher order");
    }
    return ComplexSeries(std::vector<cplx>(m_coeffs.begin(), m_coeffs.begin() + static_cast<std::ptrdiff_t>(new_order + 1u)));
}

ComplexSeries ComplexSeries::padded(std::size_t new_order) const
{
    auto v = m_coeffs;
    v.resize(std::max(new_order + 1u, v.size()));
    return ComplexSeries(std::move(v));
}

ComplexSeries add(const ComplexSeries &a, const ComplexSeries &b)
{
    std::vector<cplx> v(common_order(a, b) + 1u);
    for (std::size_t n = 0; n < v.size(); ++n) {
        v[n] = a[n] + b[n];
    }
    return ComplexSeries(std::move(v));
}

ComplexSeries sub(const ComplexSeries &a, const ComplexSeries &b)
{
    std::vector<cplx> v(common_order(a, b) + 1u);
    for (std::size_t n = 0; n < v.size(); ++n) {
        v[n] = a[n] - b[n];
    }
    return ComplexSeries(std::move(v));
}

ComplexSeries mul(const ComplexSeries &a, const ComplexSeries &b)
{
    const auto N = common_order(a, b);
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<cplx> v(N + 1u);
    for (std::size_t n = 0; n <= N; ++n) {
        cplx acc{};
        for (std::size_t k = 0; k <= n; ++k) {
            acc += ac[k] * bc[n - k];
        }
        v[n] = acc;
    }
    return ComplexSeries(std::move(v));
}

ComplexSeries scale(const ComplexSeries &a, cplx factor)
{
    std::vector<cplx> v(a.coeffs().begin(), a.coeffs().end());
    for (auto &c : v) {
        c *= factor;
    }
    return ComplexSeries(std::move(v));
}

ComplexSeries shift_up(const ComplexSeries &a, std::size_t k)
{
    std::vector<cplx> v(a.order() + 1u + k);
    std::copy(a.coeffs().begin(), a.coeffs().end(), v.begin() + static_cast<std::ptrdiff_t>(k));
    return ComplexSeries(std::move(v));
}

ComplexSeries shift_down(const ComplexSeries &a, std::size_t k)
{
    if (k > a.order()) {
        throw DegenerateOrderError("shift exceeds the series order");
    }
    return ComplexSeries(std::vector<cplx>(a.coeffs().begin() + static_cast<std::ptrdiff_t>(k), a.coeffs().end()));
}

ComplexSeries derivative(const ComplexSeries &a)
{
    if (a.order() == 0u) {
        throw DegenerateOrderError("derivative of an order-0 series");
    }
    std::vector<cplx> v(a.order());
    for (std::size_t n = 1; n <= a.order(); ++n) {
        v[n - 1u] = static_cast<double>(n) * a[n];
    }
    return ComplexSeries(std::move(v));
}

ComplexSeries integrate(const ComplexSeries &a)
{
    std::vector<cplx> v(a.order() + 2u);
    for (std::size_t n = 0; n <= a.order(); ++n) {
        v[n + 1u] = a[n] / static_cast<double>(n + 1u);
    }
    return ComplexSeries(std::move(v));
}

ComplexSeries reciprocal(const ComplexSeries &a)
{
    const cplx a0 = a[0];
    if (a0 == cplx{}) {
        throw NonInvertibleError("reciprocal of a series with zero constant term");
    }
    const auto N = a.order();
    std::vector<cplx> b(N + 1u);
    b[0] = 1.0 / a0;
    for (std::size_t n = 1; n <= N; ++n) {
        cplx acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            acc += a[k] * b[n - k];
        }
        b[n] = -acc * b[0];
    }
    return ComplexSeries(std::move(b));
}

// b' = a' b, i.e. n b_n = sum_{k=1}^n k a_k b_{n-k}.
ComplexSeries exp_series(const ComplexSeries &a)
{
    const auto N = a.order();
    std::vector<cplx> b(N + 1u);
    b[0] = std::exp(a[0]);
    for (std::size_t n = 1; n <= N; ++n) {
        cplx acc{};
        for (std::size_t k = 1; k <= n; ++k) {
            acc += static_cast<double>(k) * a[k] * b[n - k];
        }
        b[n] = acc / static_cast<double>(n);
    }
    return ComplexSeries(std::move(b));
}

// a b' = a', i.e. n a_0 b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}.
ComplexSeries log_series(const ComplexSeries &a)
{
    const cplx a0 = a[0];
    if (a0 == cplx{}) {
        throw BranchPointError("logarithm of a series with zero constant term");
    }
    const auto N = a.order();
    std::vector<cplx> b(N + 1u);
    b[0] = std::log(a0);
    for (std::size_t n = 1; n <= N; ++n) {
        cplx acc = static_cast<double>(n) * a[n];
        for (std::size_t k = 1; k < n; ++k) {
            acc -= static_cast<double>(k) * b[k] * a[n - k];
        }
        b[n] = acc / (static_cast<double>(n) * a0);
    }
    return ComplexSeries(std::move(b));
}

ComplexSeries pow_series(const ComplexSeries &a, double gamma)
{
    if (a[0] == cplx{}) {
        throw BranchPointError("fractional power of a series with zero constant term");
    }
    return exp_series(scale(log_series(a), gamma));
}

ComplexSeries compose(const ComplexSeries &outer, const ComplexSeries &inner)
{
    if (inner[0] != cplx{}) {
        throw CompositionDomainError("inner series of a composition must vanish at 0");
    }
    const auto N = common_order(outer, inner);
    const auto in = inner.truncated(N);
    auto acc = ComplexSeries::constant(outer[N], N);
    for (std::size_t n = N; n-- > 0;) {
        acc = mul(acc, in);
        std::vector<cplx> v(acc.coeffs().begin(), acc.coeffs().end());
        v[0] += outer[n];
        acc = ComplexSeries(std::move(v));
    }
    return acc;
}

cplx eval(const ComplexSeries &a, cplx z)
{
    const auto c = a.coeffs();
    cplx acc{};
    for (std::size_t n = c.size(); n-- > 0;) {
        acc = acc * z + c[n];
    }
    return acc;
}

ComplexSeries schwarzian(const ComplexSeries &f)
{
    if (f.order() < 3u) {
        throw DegenerateOrderError("the Schwarzian needs a series of order >= 3");
    }
    if (f[1] == cplx{}) {
        throw CriticalPointError("the Schwarzian is undefined where f'(0) = 0");
    }
    const auto d1 = derivative(f);
    const auto d2 = derivative(d1);
    const auto u = mul(d2, reciprocal(d1.truncated(d2.order())));
    return sub(derivative(u), scale(mul(u, u), 0.5));
}

} // namespace schwarz

#ifndef SCHWARZ_SERIES_HPP
#define SCHWARZ_SERIES_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace schwarz
{

using cplx = std::complex<double>;

// Truncation order used when callers do not ask for one.
inline constexpr std::size_t default_order = 96;

// Truncated Taylor expansion about the origin,
//
//   c[0] + c[1] z + ... + c[order] z^order.
//
// Values are immutable once built; every coefficient is finite.
class ComplexSeries
{
public:
    // The zero series of order 0.
    ComplexSeries();
    explicit ComplexSeries(std::vector<cplx> coeffs);
    ComplexSeries(std::initializer_list<cplx> coeffs);

    static ComplexSeries zero(std::size_t order);
    static ComplexSeries constant(cplx c, std::size_t order);
    // z truncated at the given order (order >= 1).
    static ComplexSeries identity(std::size_t order);
    static ComplexSeries from_real(std::span<const double> coeffs);

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1u;
    }
    std::span<const cplx> coeffs() const noexcept
    {
        return m_coeffs;
    }
    // Coefficient of z^n; zero past the truncation order.
    cplx operator[](std::size_t n) const noexcept
    {
        return n < m_coeffs.size() ? m_coeffs[n] : cplx{};
    }
    bool has_real_coefficients() const noexcept;

    // Drops terms above new_order (new_order <= order()).
    ComplexSeries truncated(std::size_t new_order) const;
    // Extends with explicit zero coefficients; for exact polynomials only.
    ComplexSeries padded(std::size_t new_order) const;

    friend bool operator==(const ComplexSeries &, const ComplexSeries &) = default;

private:
    std::vector<cplx> m_coeffs;
};

// Binary operations truncate to the smaller operand order.
ComplexSeries add(const ComplexSeries &a, const ComplexSeries &b);
ComplexSeries sub(const ComplexSeries &a, const ComplexSeries &b);
ComplexSeries mul(const ComplexSeries &a, const ComplexSeries &b);
ComplexSeries scale(const ComplexSeries &a, cplx factor);
// Multiplies by z^k; the order grows by k.
ComplexSeries shift_up(const ComplexSeries &a, std::size_t k);
// Divides by z^k; the dropped low coefficients must be zero (up to rounding
// the caller is responsible for), the order shrinks by k.
ComplexSeries shift_down(const ComplexSeries &a, std::size_t k);

ComplexSeries derivative(const ComplexSeries &a);
ComplexSeries integrate(const ComplexSeries &a);
ComplexSeries reciprocal(const ComplexSeries &a);
ComplexSeries exp_series(const ComplexSeries &a);
ComplexSeries log_series(const ComplexSeries &a);
ComplexSeries pow_series(const ComplexSeries &a, double gamma);
ComplexSeries compose(const ComplexSeries &outer, const ComplexSeries &inner);

cplx eval(const ComplexSeries &a, cplx z);

// S_f = (f''/f')' - (f''/f')^2 / 2, of order order(f) - 3.
ComplexSeries schwarzian(const ComplexSeries &f);

inline ComplexSeries operator+(const ComplexSeries &a, const ComplexSeries &b)
{
    return add(a, b);
}
inline ComplexSeries operator-(const ComplexSeries &a, const ComplexSeries &b)
{
    return sub(a, b);
}
inline ComplexSeries operator*(const ComplexSeries &a, const ComplexSeries &b)
{
    return mul(a, b);
}
inline ComplexSeries operator*(cplx c, const ComplexSeries &a)
{
    return scale(a, c);
}

} // namespace schwarz

#endif

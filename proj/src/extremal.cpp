#include <schwarz/extremal.hpp>

#include <algorithm>
#include <cmath>
#include <vector>

#include <schwarz/errors.hpp>

namespace schwarz
{

namespace
{

ComplexSeries monomial(std::size_t k, std::size_t order)
{
    std::vector<cplx> v(order + 1u);
    if (k <= order) {
        v[k] = 1.0;
    }
    return ComplexSeries(std::move(v));
}

// phi(z^k) truncated at the given order.
ComplexSeries phi_of_power(const GeneratorSpec &spec, int k, std::size_t order)
{
    return compose(phi_series(spec, order), monomial(static_cast<std::size_t>(k), order));
}

} // namespace

ExtremalFunction build_extremal(const GeneratorSpec &spec, int k, std::size_t order)
{
    if (k < 1) {
        throw DomainError("the exponent of omega(z) = z^k must be >= 1");
    }
    if (order < 7u) {
        throw DegenerateOrderError("extremal functions are built to order >= 7");
    }
    const std::size_t work = order + 2u;
    // f''/f' = (phi(z^k) - 1)/z; the constant term of phi(z^k) - 1 is zero.
    const auto shifted = phi_of_power(spec, k, work) - ComplexSeries::constant(1.0, work);
    const auto log_fprime = integrate(shift_down(shifted, 1u));
    const auto fprime = exp_series(log_fprime);
    return ExtremalFunction{integrate(fprime).truncated(order), spec, k};
}

double verify_subordination_ode(const ExtremalFunction &e)
{
    const auto &f = e.f;
    const auto d1 = derivative(f);
    const auto d2 = derivative(d1);
    const auto ratio = mul(d2, reciprocal(d1.truncated(d2.order())));
    const std::size_t top = ratio.order();
    const auto lhs = (ComplexSeries::constant(1.0, top + 1u) + shift_up(ratio, 1u)).truncated(top);
    const auto rhs = phi_of_power(e.spec, e.omega_exponent, top);
    double worst = 0.0;
    for (std::size_t n = 0; n <= top; ++n) {
        worst = std::max(worst, std::abs(lhs[n] - rhs[n]));
    }
    return worst;
}

} // namespace schwarz

#ifndef SCHWARZ_EXTREMAL_HPP
#define SCHWARZ_EXTREMAL_HPP

#include <cstddef>

#include <schwarz/generators.hpp>
#include <schwarz/series.hpp>

namespace schwarz
{

// Normalized f (f(0) = 0, f'(0) = 1) solving 1 + z f''/f' = phi(z^k).
struct ExtremalFunction {
    ComplexSeries f;
    GeneratorSpec spec;
    int omega_exponent = 1;
};

ExtremalFunction build_extremal(const GeneratorSpec &spec, int k, std::size_t order);

// Largest coefficient mismatch between 1 + z f''/f' and phi(z^k), up to
// order(f) - 2.
double verify_subordination_ode(const ExtremalFunction &e);

} // namespace schwarz

#endif

#ifndef SCHWARZ_SRC_GOLDEN_HPP
#define SCHWARZ_SRC_GOLDEN_HPP

#include <cmath>
#include <utility>

namespace schwarz::detail
{

// Golden-section search for a maximum of f on [lo, hi]. Returns the best
// point evaluated, which for a unimodal f converges to the maximizer.
template <typename F>
std::pair<double, double> golden_max(F &&f, double lo, double hi, int iters)
{
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    std::pair<double, double> best = f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
    for (int i = 0; i < iters; ++i) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = f(x1);
            if (f1 > best.second) {
                best = {x1, f1};
            }
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = f(x2);
            if (f2 > best.second) {
                best = {x2, f2};
            }
        }
    }
    return best;
}

} // namespace schwarz::detail

#endif

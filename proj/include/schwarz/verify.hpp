#ifndef SCHWARZ_VERIFY_HPP
#define SCHWARZ_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <schwarz/estimator.hpp>
#include <schwarz/generators.hpp>
#include <schwarz/series.hpp>

namespace schwarz
{

// Outcome of one numerical check. worst_value is the extremal quantity the
// check's inequality is applied to; worst_location says where it occurred.
struct VerificationReport {
    std::string name;
    bool passed = false;
    double worst_value = 0.0;
    std::string worst_location;
    std::string range_tested;
};

// Tolerance below zero accepted for coefficients that are provably >= 0.
inline constexpr double nonnegativity_tol = 1e-12;

// A_n = sum_{k+l+m=n} 1/((2k+1)(2l+1)(2m+1)), by direct enumeration.
double sum_a(int n);
// B_n = (1/(n+1)) sum_{k=0}^n 1/(2k+1).
double sum_b(int n);
// B_n = sum_{k+l=n} 1/((2k+1)(2l+1)), by direct enumeration.
double sum_b_direct(int n);

// 2 z phi'(z) + 1 - phi(z)^2 expanded to the given order.
ComplexSeries q_series(const GeneratorSpec &spec, std::size_t order);

// h(s) = alpha ((1-alpha) P(s)^2 + 2 alpha (1-s)/(1+s) P(s) - (1+alpha)),
// P = ((1+s)/(1-s))^alpha. Vanishes at s = 0 and increases on (0, 1).
double h_eval(double alpha, double s);

struct EqLastSides {
    double lhs = 0.0;
    double rhs = 0.0;
};
// lhs = G(s), rhs = pi (sqrt((1-s)^2 + 16 s/pi) - 1 + s) / (8 s), 0 < s < 1.
EqLastSides check_eq_last(double s);

VerificationReport check_sum_a(int max_n);
VerificationReport check_sum_b(int max_n);
VerificationReport check_sum_b_closed_form(int max_n);
VerificationReport check_inner_inequality(int max_n);
// Fails if any real part is below -nonnegativity_tol or any imaginary part is
// larger than that in modulus.
VerificationReport check_nonnegative_coefficients(std::string name, const ComplexSeries &series,
                                                  std::string range_tested);
std::vector<VerificationReport> check_positivity_lemmas(std::size_t order = 200);
VerificationReport check_lowner_bound(std::size_t order = 96);
VerificationReport check_h_monotone();
VerificationReport check_eq_last_grid();
std::vector<VerificationReport> check_f_bounds();
VerificationReport check_circle_sup_positive_axis();
VerificationReport suita_check(double a, double tol, const NPhiOptions &opts = {});

// Check groups accepted by run_selected.
std::vector<std::string> lemma_groups();
std::vector<VerificationReport> run_selected(std::string_view group, int max_n, int grid);
// Every group, in the order of lemma_groups().
std::vector<VerificationReport> run_all(int max_n = 1000, int grid = 256);

bool all_passed(const std::vector<VerificationReport> &reports);

// JSON array of {name, passed, worst_value, worst_location, range_tested}.
std::string reports_to_json(const std::vector<VerificationReport> &reports);

} // namespace schwarz

#endif

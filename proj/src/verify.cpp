#include <schwarz/verify.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include <json.hpp>

#include <schwarz/errors.hpp>

namespace schwarz
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr double ucv_bound = 8.0 / (pi * pi);

const std::vector<double> &alpha_sweep()
{
    static const std::vector<double> v{0.1, 0.25, 0.5, 0.75, 0.9, 1.0};
    return v;
}

std::string format(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

std::string index_location(std::string_view prefix, std::size_t n)
{
    return std::string(prefix) + "n=" + std::to_string(n);
}

// Merges reports of the same check over a parameter sweep: passes when all
// pass, the worst entry is the one with the smallest worst_value.
VerificationReport merge_min(std::string name, std::vector<VerificationReport> parts, std::string range)
{
    VerificationReport out;
    out.name = std::move(name);
    out.range_tested = std::move(range);
    out.passed = true;
    out.worst_value = parts.front().worst_value;
    out.worst_location = parts.front().worst_location;
    for (const auto &p : parts) {
        out.passed = out.passed && p.passed;
        if (p.worst_value < out.worst_value) {
            out.worst_value = p.worst_value;
            out.worst_location = p.worst_location;
        }
    }
    return out;
}

} // namespace

double sum_a(int n)
{
    if (n < 0) {
        throw DomainError("sum_a needs n >= 0");
    }
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        for (int l = 0; k + l <= n; ++l) {
            const int m = n - k - l;
            acc += 1.0 / (static_cast<double>(2 * k + 1) * (2 * l + 1) * (2 * m + 1));
        }
    }
    return acc;
}

double sum_b(int n)
{
    if (n < 0) {
        throw DomainError("sum_b needs n >= 0");
    }
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        acc += 1.0 / (2 * k + 1);
    }
    return acc / (n + 1);
}

double sum_b_direct(int n)
{
    if (n < 0) {
        throw DomainError("sum_b needs n >= 0");
    }
    double acc = 0.0;
    for (int k = 0; k <= n; ++k) {
        acc += 1.0 / (static_cast<double>(2 * k + 1) * (2 * (n - k) + 1));
    }
    return acc;
}

ComplexSeries q_series(const GeneratorSpec &spec, std::size_t order)
{
    if (order < 2u) {
        throw DegenerateOrderError("q_series needs order >= 2");
    }
    return q_from_phi(phi_series(spec, order));
}

double h_eval(double alpha, double s)
{
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw DomainError("h(s) is defined for 0 < alpha < 1");
    }
    if (!(s >= 0.0 && s < 1.0)) {
        throw DomainError("h(s) is defined for 0 <= s < 1");
    }
    const double p = phi_eval(GeneratorSpec::strongly_convex(alpha), s).real();
    return alpha * ((1.0 - alpha) * p * p + 2.0 * alpha * (1.0 - s) / (1.0 + s) * p - (1.0 + alpha));
}

EqLastSides check_eq_last(double s)
{
    if (!(s > 0.0 && s < 1.0)) {
        throw DomainError("the G(s) lower bound is checked for 0 < s < 1");
    }
    const double rhs = pi * (std::sqrt((1.0 - s) * (1.0 - s) + 16.0 * s / pi) - 1.0 + s) / (8.0 * s);
    return {g_eval(s).real(), rhs};
}

VerificationReport check_sum_a(int max_n)
{
    VerificationReport r{"lemma_sum_a", true, 0.0, {}, "A_n <= 1 for 0 <= n <= " + std::to_string(max_n)};
    r.worst_value = -1.0;
    for (int n = 0; n <= max_n; ++n) {
        const double a = sum_a(n);
        if (a > r.worst_value) {
            r.worst_value = a;
            r.worst_location = index_location("", n);
        }
        r.passed = r.passed && a <= 1.0 + 1e-12;
        if (n <= 1) {
            r.passed = r.passed && std::abs(a - 1.0) <= 1e-12;
        }
    }
    return r;
}

VerificationReport check_sum_b(int max_n)
{
    if (max_n == 0) {
        const double b0 = sum_b(0);
        return {"lemma_sum_b", std::abs(b0 - 1.0) <= 1e-15, b0, "n=0", "B_0 = 1"};
    }
    const int top = 10 * max_n;
    VerificationReport r{"lemma_sum_b", true, -1.0, {}, "B_n <= 2/3 for 1 <= n <= " + std::to_string(top)};
    for (int n = 1; n <= top; ++n) {
        const double b = sum_b(n);
        if (b > r.worst_value) {
            r.worst_value = b;
            r.worst_location = index_location("", static_cast<std::size_t>(n));
        }
    }
    r.passed = r.worst_value <= 2.0 / 3.0 + 1e-12;
    return r;
}

VerificationReport check_sum_b_closed_form(int max_n)
{
    VerificationReport r{"sum_b_closed_form", true, 0.0, "n=0",
                         "closed form vs direct double sum, 0 <= n <= " + std::to_string(max_n)};
    for (int n = 0; n <= max_n; ++n) {
        const double diff = std::abs(sum_b(n) - sum_b_direct(n));
        if (diff > r.worst_value) {
            r.worst_value = diff;
            r.worst_location = index_location("", static_cast<std::size_t>(n));
        }
    }
    r.passed = r.worst_value <= 1e-12;
    return r;
}

VerificationReport check_inner_inequality(int max_n)
{
    // (pi^2/4)(2n+2)/(2n+3) >= pi^2/6 > 1 >= A_n; worst_value is the
    // smallest gap among the three links.
    VerificationReport r{"ucv_inner_inequality", true, 0.0, "n=0",
                         "(pi^2/4)(2n+2)/(2n+3) >= pi^2/6 > 1 >= A_n, 0 <= n <= " + std::to_string(max_n)};
    r.worst_value = pi * pi / 6.0 - 1.0;
    for (int n = 0; n <= max_n; ++n) {
        const double lhs = pi * pi / 4.0 * (2.0 * n + 2.0) / (2.0 * n + 3.0);
        const double gap = std::min(lhs - pi * pi / 6.0, 1.0 - sum_a(n));
        if (gap < r.worst_value) {
            r.worst_value = gap;
            r.worst_location = index_location("", static_cast<std::size_t>(n));
        }
    }
    r.passed = r.worst_value >= -1e-12;
    return r;
}

VerificationReport check_nonnegative_coefficients(std::string name, const ComplexSeries &series,
                                                  std::string range_tested)
{
    VerificationReport r{std::move(name), true, series[0].real(), "n=0", std::move(range_tested)};
    for (std::size_t n = 0; n <= series.order(); ++n) {
        const cplx c = series[n];
        if (std::abs(c.imag()) > nonnegativity_tol) {
            r.passed = false;
        }
        if (c.real() < r.worst_value) {
            r.worst_value = c.real();
            r.worst_location = index_location("", n);
        }
    }
    r.passed = r.passed && r.worst_value >= -nonnegativity_tol;
    return r;
}

std::vector<VerificationReport> check_positivity_lemmas(std::size_t order)
{
    const auto range = [&](std::string_view what) {
        return std::string(what) + " coefficients >= -1e-12 to order " + std::to_string(order);
    };
    std::vector<VerificationReport> p_parts, q_parts;
    for (double alpha : alpha_sweep()) {
        const auto spec = GeneratorSpec::strongly_convex(alpha);
        const auto tag = "alpha=" + format(alpha) + ",";
        auto p = check_nonnegative_coefficients("p_alpha", phi_series(spec, order), {});
        auto q = check_nonnegative_coefficients("q_alpha", q_series(spec, order), {});
        p.worst_location = tag + p.worst_location;
        q.worst_location = tag + q.worst_location;
        p_parts.push_back(std::move(p));
        q_parts.push_back(std::move(q));
    }
    const auto ucv = GeneratorSpec::uniformly_convex();
    std::vector<VerificationReport> out;
    out.push_back(merge_min("lemma_p_alpha_nonnegative", std::move(p_parts),
                            range("P_alpha, alpha in {0.1,0.25,0.5,0.75,0.9,1}")));
    out.push_back(merge_min("lemma_q_alpha_nonnegative", std::move(q_parts),
                            range("Q_alpha, alpha in {0.1,0.25,0.5,0.75,0.9,1}")));
    out.push_back(check_nonnegative_coefficients("lemma_p_ucv_nonnegative", phi_series(ucv, order), range("P")));
    out.push_back(check_nonnegative_coefficients("lemma_q_ucv_nonnegative", q_series(ucv, order), range("Q")));
    return out;
}

VerificationReport check_lowner_bound(std::size_t order)
{
    // worst_value: smallest slack min(a_n, 2 alpha - a_n) over the sweep.
    VerificationReport r{"lowner_coefficient_bound", true, 1e300, {},
                         "0 <= a_n <= 2 alpha for 1 <= n <= " + std::to_string(order)
                             + ", alpha in {0.1,...,0.9,1}"};
    for (int i = 1; i <= 10; ++i) {
        const double alpha = i / 10.0;
        const auto p = phi_series(GeneratorSpec::strongly_convex(alpha), order);
        for (std::size_t n = 1; n <= order; ++n) {
            const double a = p[n].real();
            const double slack = std::min(a, 2.0 * alpha - a);
            if (slack < r.worst_value) {
                r.worst_value = slack;
                r.worst_location = "alpha=" + format(alpha) + "," + index_location("", n);
            }
        }
    }
    r.passed = r.worst_value >= -nonnegativity_tol;
    return r;
}

VerificationReport check_h_monotone()
{
    // worst_value: smallest of h(s) and of the increments h(s+0.01) - h(s).
    VerificationReport r{"h_positive_increasing", true, 1e300, {},
                         "h(alpha, s) > 0 and increasing on s = 0.01..0.99, alpha in {0.25,0.5,0.75}"};
    for (double alpha : {0.25, 0.5, 0.75}) {
        double prev = h_eval(alpha, 0.0);
        for (int i = 1; i <= 99; ++i) {
            const double s = i / 100.0;
            const double h = h_eval(alpha, s);
            const double margin = std::min(h, h - prev);
            if (margin < r.worst_value) {
                r.worst_value = margin;
                r.worst_location = "alpha=" + format(alpha) + ",s=" + format(s);
            }
            prev = h;
        }
    }
    r.passed = r.worst_value > 0.0;
    return r;
}

VerificationReport check_eq_last_grid()
{
    // worst_value: smallest of lhs - rhs, 1 - rhs and lhs - 1.
    VerificationReport r{"ucv_g_lower_bound", true, 1e300, {}, "G(s) >= rhs(s), rhs < 1 < G on s = 0.001..0.999"};
    for (int i = 1; i <= 999; ++i) {
        const double s = i / 1000.0;
        const auto [lhs, rhs] = check_eq_last(s);
        const double margin = std::min({lhs - rhs, 1.0 - rhs, lhs - 1.0});
        if (margin < r.worst_value) {
            r.worst_value = margin;
            r.worst_location = "s=" + format(s);
        }
    }
    r.passed = r.worst_value > 0.0;
    return r;
}

std::vector<VerificationReport> check_f_bounds()
{
    // 100 x 100 grid: s = i/100, t = (j + 1/2)/100, keeping s < t.
    const auto sweep = [](std::string name, const GeneratorSpec &spec, double bound, std::string range) {
        VerificationReport r{std::move(name), true, 1e300, {}, std::move(range)};
        for (int i = 0; i < 100; ++i) {
            for (int j = 0; j < 100; ++j) {
                const double s = i / 100.0;
                const double t = (j + 0.5) / 100.0;
                if (!(s < t)) {
                    continue;
                }
                const double slack = bound - f_closed_form(spec, s, t);
                if (slack < r.worst_value) {
                    r.worst_value = slack;
                    r.worst_location = "s=" + format(s) + ",t=" + format(t);
                }
            }
        }
        r.passed = r.worst_value >= -1e-12;
        return r;
    };
    std::vector<VerificationReport> out;
    std::vector<VerificationReport> parts;
    for (double alpha : {0.25, 0.5, 0.75, 1.0}) {
        auto r = sweep("", GeneratorSpec::strongly_convex(alpha), 2.0 * alpha, {});
        r.worst_location = "alpha=" + format(alpha) + "," + r.worst_location;
        parts.push_back(std::move(r));
    }
    out.push_back(merge_min("f_bound_strongly_convex", std::move(parts),
                            "2 alpha - F(s, t) >= 0 on a 100x100 grid, alpha in {0.25,0.5,0.75,1}"));
    out.push_back(sweep("f_bound_uniformly_convex", GeneratorSpec::uniformly_convex(), ucv_bound,
                        "8/pi^2 - F(s, t) >= 0 on a 100x100 grid"));
    return out;
}

VerificationReport check_circle_sup_positive_axis()
{
    // worst_value: largest relative deviation of A(s), B(s) from the values at z = s.
    VerificationReport r{"circle_sup_positive_axis", true, 0.0, "-",
                         "A(s), B(s) attained at z = s for s = 0.1..0.9, strongly convex sweep and UCV"};
    std::vector<GeneratorSpec> specs;
    for (double alpha : alpha_sweep()) {
        specs.push_back(GeneratorSpec::strongly_convex(alpha));
    }
    specs.push_back(GeneratorSpec::uniformly_convex());
    for (const auto &spec : specs) {
        for (int i = 1; i <= 9; ++i) {
            const double s = i / 10.0;
            const auto rb = circle_sup(spec, s);
            const cplx p = phi_eval(spec, s);
            const cplx dp = phi_prime_eval(spec, s);
            const double a_axis = std::abs(2.0 * s * dp + 1.0 - p * p);
            const double dev = std::max(std::abs(rb.a_value - a_axis) / std::max(1.0, rb.a_value),
                                        std::abs(rb.b_value - std::abs(dp)) / std::max(1.0, rb.b_value));
            if (dev > r.worst_value) {
                r.worst_value = dev;
                r.worst_location = spec.describe() + ",s=" + format(s);
            }
        }
    }
    r.passed = r.worst_value <= 1e-8;
    return r;
}

VerificationReport suita_check(double a, double tol, const NPhiOptions &opts)
{
    if (!(a >= 0.5 && a < 1.0)) {
        throw DomainError("the half-plane bound 8a(1-a) is checked for 1/2 <= a < 1");
    }
    const double sharp = 8.0 * a * (1.0 - a);
    const auto est = n_phi(GeneratorSpec::half_plane(a), opts);
    const auto w = std::get<RadiusPair>(est.witness);
    VerificationReport r;
    r.name = "suita_half_plane";
    r.worst_value = std::abs(est.value - sharp);
    r.passed = r.worst_value <= tol;
    r.worst_location = "a=" + format(a) + ",s=" + format(w.s) + ",t=" + format(w.t);
    r.range_tested = "|N(phi_a) - 8a(1-a)| <= " + format(tol) + ", N = " + format(est.value);
    return r;
}

std::vector<std::string> lemma_groups()
{
    return {"sum", "positivity", "lowner", "h", "last", "fbound", "circle", "suita"};
}

std::vector<VerificationReport> run_selected(std::string_view group, int max_n, int grid)
{
    if (max_n < 0) {
        throw DomainError("max_n must be non-negative");
    }
    if (group == "sum") {
        return {check_sum_a(max_n), check_sum_b(max_n), check_sum_b_closed_form(max_n), check_inner_inequality(max_n)};
    }
    if (group == "positivity") {
        return check_positivity_lemmas();
    }
    if (group == "lowner") {
        return {check_lowner_bound()};
    }
    if (group == "h") {
        return {check_h_monotone()};
    }
    if (group == "last") {
        return {check_eq_last_grid()};
    }
    if (group == "fbound") {
        return check_f_bounds();
    }
    if (group == "circle") {
        return {check_circle_sup_positive_axis()};
    }
    if (group == "suita") {
        NPhiOptions opts;
        opts.grid = grid;
        std::vector<VerificationReport> out;
        for (double a : {0.5, 0.6, 0.75}) {
            out.push_back(suita_check(a, 1e-3, opts));
        }
        return out;
    }
    throw DomainError("unknown check group: " + std::string(group));
}

std::vector<VerificationReport> run_all(int max_n, int grid)
{
    std::vector<VerificationReport> out;
    for (const auto &g : lemma_groups()) {
        auto part = run_selected(g, max_n, grid);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

bool all_passed(const std::vector<VerificationReport> &reports)
{
    return std::all_of(reports.begin(), reports.end(), [](const auto &r) { return r.passed; });
}

std::string reports_to_json(const std::vector<VerificationReport> &reports)
{
    auto arr = nlohmann::json::array();
    for (const auto &r : reports) {
        arr.push_back({{"name", r.name},
                       {"passed", r.passed},
                       {"worst_value", r.worst_value},
                       {"worst_location", r.worst_location},
                       {"range_tested", r.range_tested}});
    }
    return arr.dump();
}

} // namespace schwarz

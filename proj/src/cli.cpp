#include <schwarz/cli.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <schwarz/coeff_io.hpp>
#include <schwarz/errors.hpp>
#include <schwarz/estimator.hpp>
#include <schwarz/extremal.hpp>
#include <schwarz/generators.hpp>
#include <schwarz/series.hpp>
#include <schwarz/verify.hpp>

namespace schwarz
{

namespace
{

using nlohmann::json;

constexpr double pi = std::numbers::pi;

struct GlobalArgs {
    bool json = false;
    std::size_t order = default_order;
    int grid = 256;
    int refine = 40;
    long seed = 0;
};

struct ClassArgs {
    std::string cls;
    double alpha = 0.5;
    double a = 0.5;
    std::string coeffs;
};

void add_class_options(CLI::App *cmd, ClassArgs &c, bool required = true)
{
    auto *opt = cmd->add_option("--class", c.cls, "generator class: kalpha, ucv, halfplane, custom")
                    ->check(CLI::IsMember({"kalpha", "ucv", "halfplane", "custom"}));
    if (required) {
        opt->required();
    }
    cmd->add_option("--alpha", c.alpha, "order of strong convexity, 0 < alpha <= 1")->capture_default_str();
    cmd->add_option("--a", c.a, "half-plane order, 0 <= a < 1")->capture_default_str();
    cmd->add_option("--coeffs", c.coeffs, "coefficient file of a custom generator");
}

GeneratorSpec make_spec(const ClassArgs &c)
{
    if (c.cls == "kalpha") {
        return GeneratorSpec::strongly_convex(c.alpha);
    }
    if (c.cls == "ucv") {
        return GeneratorSpec::uniformly_convex();
    }
    if (c.cls == "halfplane") {
        return GeneratorSpec::half_plane(c.a);
    }
    if (c.coeffs.empty()) {
        throw DomainError("--class custom needs --coeffs FILE");
    }
    return GeneratorSpec::custom(read_coefficients(c.coeffs));
}

json class_inputs(const ClassArgs &c)
{
    json j{{"class", c.cls}};
    if (c.cls == "kalpha") {
        j["alpha"] = c.alpha;
    } else if (c.cls == "halfplane") {
        j["a"] = c.a;
    } else if (c.cls == "custom") {
        j["coeffs"] = c.coeffs;
    }
    return j;
}

// Sharp value of N(phi) where a closed form is known.
std::optional<double> sharp_value(const GeneratorSpec &spec)
{
    switch (spec.kind) {
        case GeneratorKind::StronglyConvex:
            return 2.0 * spec.alpha;
        case GeneratorKind::UniformlyConvex:
            return 8.0 / (pi * pi);
        case GeneratorKind::HalfPlane:
            if (spec.a >= 0.5) {
                return 8.0 * spec.a * (1.0 - spec.a);
            }
            return std::nullopt;
        case GeneratorKind::Custom:
            return std::nullopt;
    }
    return std::nullopt;
}

json coefficient_list(const ComplexSeries &s)
{
    auto arr = json::array();
    for (const auto &c : s.coeffs()) {
        arr.push_back({c.real(), c.imag()});
    }
    return arr;
}

json estimate_json(const NormEstimate &e)
{
    json j{{"value", e.value},
           {"grid_resolution", e.grid_resolution},
           {"refinement_steps", e.refinement_steps},
           {"is_lower_bound", e.is_lower_bound}};
    if (const auto *st = std::get_if<RadiusPair>(&e.witness)) {
        j["witness"] = {{"s", st->s}, {"t", st->t}};
    } else {
        const auto z = std::get<cplx>(e.witness);
        j["witness"] = {{"re", z.real()}, {"im", z.imag()}};
    }
    return j;
}

void print_text(std::ostream &out, const json &j, const std::string &prefix = {})
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto key = prefix.empty() ? it.key() : prefix + "." + it.key();
        if (it->is_object()) {
            print_text(out, *it, key);
        } else if (it->is_array()) {
            out << key << ": " << it->size() << " entries\n";
        } else if (it->is_number_float()) {
            out << key << ": " << std::setprecision(12) << it->get<double>() << '\n';
        } else if (it->is_string()) {
            out << key << ": " << it->get<std::string>() << '\n';
        } else {
            out << key << ": " << it->dump() << '\n';
        }
    }
}

struct Outcome {
    json inputs = json::object();
    json result = json::object();
    int code = exit_ok;
    // Already printed in text mode (CSV, coefficient lists, report tables).
    bool printed = false;
};

Outcome cmd_nphi(const GlobalArgs &g, const ClassArgs &c)
{
    const auto spec = make_spec(c);
    NPhiOptions opts;
    opts.grid = g.grid;
    opts.refine_iters = g.refine;
    const auto est = n_phi(spec, opts);
    Outcome o;
    o.inputs = class_inputs(c);
    o.inputs["grid"] = g.grid;
    o.inputs["refine"] = g.refine;
    o.result = estimate_json(est);
    if (const auto sharp = sharp_value(spec)) {
        o.result["sharp"] = *sharp;
        o.result["gap"] = *sharp - est.value;
        // Ahlfors-Weill: ||S_f|| <= 2k gives a k-quasiconformal extension.
        o.result["qc_constant"] = *sharp / 2.0;
    }
    return o;
}

Outcome cmd_extremal(const GlobalArgs &g, const ClassArgs &c, int k, const std::string &out_path, double r_max)
{
    const auto spec = make_spec(c);
    const auto e = build_extremal(spec, k, g.order);
    HypNormOptions hopts;
    hopts.r_max = r_max;
    hopts.refine_iters = g.refine;
    const auto S = schwarzian(e.f);
    const auto norm = hyperbolic_norm(e.f, hopts);
    if (!out_path.empty()) {
        write_coefficients(out_path, e.f);
    }
    Outcome o;
    o.inputs = class_inputs(c);
    o.inputs["k"] = k;
    o.inputs["order"] = g.order;
    o.inputs["r_max"] = r_max;
    if (!out_path.empty()) {
        o.inputs["out"] = out_path;
    }
    o.result["schwarzian_at_0"] = {{"re", S[0].real()}, {"im", S[0].imag()}};
    o.result["hyperbolic_norm"] = estimate_json(norm);
    o.result["ode_mismatch"] = verify_subordination_ode(e);
    if (const auto sharp = sharp_value(spec); sharp && k == 2) {
        o.result["sharp"] = *sharp;
    }
    o.result["coefficients"] = coefficient_list(e.f);
    return o;
}

Outcome cmd_hypnorm(const GlobalArgs &g, const std::string &path, double r_max, int radial, int angular)
{
    const auto f = read_coefficients(path);
    HypNormOptions opts;
    opts.r_max = r_max;
    opts.radial_samples = radial;
    opts.angular_samples = angular;
    opts.refine_iters = g.refine;
    const auto est = hyperbolic_norm(f, opts);
    Outcome o;
    o.inputs = {{"coeffs", path}, {"r_max", r_max}, {"radial", radial}, {"angular", angular}, {"refine", g.refine}};
    o.result = estimate_json(est);
    return o;
}

Outcome cmd_coeffs(const GlobalArgs &g, const ClassArgs &c, const std::string &what, int k,
                   const std::string &out_path, std::ostream &out)
{
    ComplexSeries s;
    if (what == "g") {
        s = g_series(g.order);
    } else {
        const auto spec = make_spec(c);
        if (what == "phi") {
            s = phi_series(spec, g.order);
        } else if (what == "q") {
            s = q_series(spec, g.order);
        } else {
            s = build_extremal(spec, k, g.order).f;
        }
    }
    Outcome o;
    o.inputs = class_inputs(c);
    o.inputs["what"] = what;
    o.inputs["order"] = g.order;
    if (what == "extremal") {
        o.inputs["k"] = k;
    }
    if (!out_path.empty()) {
        o.inputs["out"] = out_path;
        write_coefficients(out_path, s);
    } else if (!g.json) {
        write_coefficients(out, s);
        o.printed = true;
    }
    o.result["order"] = s.order();
    o.result["coefficients"] = coefficient_list(s);
    return o;
}

Outcome cmd_verify(const GlobalArgs &g, bool all, const std::vector<std::string> &lemmas, int max_n, std::ostream &out)
{
    std::vector<VerificationReport> reports;
    if (all || lemmas.empty()) {
        reports = run_all(max_n, g.grid);
    } else {
        for (const auto &l : lemmas) {
            auto part = run_selected(l, max_n, g.grid);
            reports.insert(reports.end(), part.begin(), part.end());
        }
    }
    Outcome o;
    o.inputs = {{"all", all || lemmas.empty()}, {"lemmas", lemmas}, {"max_n", max_n}, {"grid", g.grid}};
    o.result = json::parse(reports_to_json(reports));
    o.code = all_passed(reports) ? exit_ok : exit_failure;
    if (!g.json) {
        for (const auto &r : reports) {
            out << (r.passed ? "PASS " : "FAIL ") << r.name << "  worst=" << std::setprecision(12) << r.worst_value
                << " at " << r.worst_location << "  [" << r.range_tested << "]\n";
        }
        o.printed = true;
    }
    return o;
}

void write_figure1_csv(std::ostream &os, double step, std::size_t &rows)
{
    os << "alpha,value\n";
    const auto count = static_cast<long>(std::floor(1.0 / step + 1e-9));
    char buf[64];
    for (long i = 1; i < count; ++i) {
        const double alpha = step * static_cast<double>(i);
        if (!(alpha < 1.0)) {
            break;
        }
        const double v = figure1_value(alpha);
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), alpha);
        os.write(buf, p - buf);
        os << ',';
        auto [q, ec2] = std::to_chars(buf, buf + sizeof(buf), v);
        os.write(buf, q - buf);
        os << '\n';
        ++rows;
    }
}

Outcome cmd_figure1(const GlobalArgs &g, const std::string &csv_path, double step, bool crossing, std::ostream &out)
{
    if (!(step > 0.0 && step < 0.5)) {
        throw DomainError("--step must lie in (0, 0.5)");
    }
    Outcome o;
    o.inputs = {{"step", step}, {"crossing", crossing}};
    std::size_t rows = 0;
    if (!csv_path.empty()) {
        o.inputs["csv"] = csv_path;
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) {
            throw IoError("cannot write " + csv_path);
        }
        write_figure1_csv(f, step, rows);
        if (!f) {
            throw IoError("write to " + csv_path + " failed");
        }
    } else if (!g.json) {
        write_figure1_csv(out, step, rows);
        o.printed = true;
    } else {
        std::ostringstream sink;
        write_figure1_csv(sink, step, rows);
    }
    o.result["rows"] = rows;
    o.result["k1"] = std::sin(pi * gamma_inverse(0.5) / 2.0);
    if (crossing) {
        const auto [lo, hi] = figure1_bracket(1e-10);
        o.result["crossing"] = {{"lo", lo}, {"hi", hi}, {"root", 0.5 * (lo + hi)}};
        o.result["crossing_bracket_4dp"] = {std::floor(lo * 1e4) / 1e4, std::floor(lo * 1e4) / 1e4 + 1e-4};
    }
    return o;
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Sharp Schwarzian norm bounds for Ma-Minda convex classes", "schwarz"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalArgs g;
    app.add_flag("--json", g.json, "emit one JSON object");
    app.add_option("--order", g.order, "series truncation order")->capture_default_str()->check(CLI::Range(7, 4096));
    app.add_option("--grid", g.grid, "grid points per axis")->capture_default_str()->check(CLI::Range(16, 100000));
    app.add_option("--refine", g.refine, "refinement passes")->capture_default_str()->check(CLI::NonNegativeNumber);
    app.add_option("--seed", g.seed, "reserved, ignored");

    ClassArgs cls;
    auto *nphi = app.add_subcommand("nphi", "estimate N(phi), the sharp bound of ||S_f|| over K(phi)");
    add_class_options(nphi, cls);

    int k = 2;
    std::string out_path;
    double r_max = 0.8;
    auto *extremal = app.add_subcommand("extremal", "build the extremal f with 1 + z f''/f' = phi(z^k)");
    add_class_options(extremal, cls);
    extremal->add_option("--k", k, "exponent of omega(z) = z^k")->capture_default_str()->check(CLI::PositiveNumber);
    extremal->add_option("--out", out_path, "write the coefficients of f to this file");
    extremal->add_option("--rmax", r_max, "search radius of the hyperbolic norm")->capture_default_str();

    std::string hyp_path;
    int radial = 96, angular = 256;
    auto *hypnorm = app.add_subcommand("hypnorm", "hyperbolic sup-norm of S_f for f read from a coefficient file");
    hypnorm->add_option("--coeffs", hyp_path, "coefficient file of f")->required();
    hypnorm->add_option("--rmax", r_max, "search radius")->capture_default_str();
    hypnorm->add_option("--radial", radial, "radial samples")->capture_default_str();
    hypnorm->add_option("--angular", angular, "angular samples")->capture_default_str();

    std::string what = "phi";
    auto *coeffs = app.add_subcommand("coeffs", "print Taylor coefficients");
    add_class_options(coeffs, cls, false);
    coeffs->add_option("--what", what, "phi, q, g or extremal")
        ->capture_default_str()
        ->check(CLI::IsMember({"phi", "q", "g", "extremal"}));
    coeffs->add_option("--k", k, "exponent for --what extremal")->capture_default_str();
    coeffs->add_option("--out", out_path, "write to this file instead of stdout");

    bool all = false;
    std::vector<std::string> lemmas;
    int max_n = 1000;
    auto *verify = app.add_subcommand("verify", "run the numerical lemma checks");
    verify->add_flag("--all", all, "run every check");
    verify->add_option("--lemma", lemmas, "check group(s)")->check(CLI::IsMember(lemma_groups()));
    verify->add_option("--max-n", max_n, "largest index of the coefficient sums")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);

    std::string csv_path;
    double step = 0.001;
    bool crossing = false;
    auto *figure1 = app.add_subcommand("figure1", "sample sin(pi gamma^{-1}(alpha)/2) - alpha as CSV");
    figure1->add_option("--csv", csv_path, "output CSV path (stdout when omitted)");
    figure1->add_option("--step", step, "alpha step")->capture_default_str();
    figure1->add_flag("--crossing", crossing, "also locate the sign change");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    std::string command;
    try {
        if (*nphi) {
            command = "nphi";
            o = cmd_nphi(g, cls);
        } else if (*extremal) {
            command = "extremal";
            o = cmd_extremal(g, cls, k, out_path, r_max);
        } else if (*hypnorm) {
            command = "hypnorm";
            o = cmd_hypnorm(g, hyp_path, r_max, radial, angular);
        } else if (*coeffs) {
            command = "coeffs";
            if (what != "g" && cls.cls.empty()) {
                throw DomainError("--class is required unless --what g");
            }
            o = cmd_coeffs(g, cls, what, k, out_path, out);
        } else if (*verify) {
            command = "verify";
            o = cmd_verify(g, all, lemmas, max_n, out);
        } else {
            command = "figure1";
            o = cmd_figure1(g, csv_path, step, crossing, out);
        }
    } catch (const IoError &e) {
        err << "error: " << e.what() << '\n';
        return exit_io;
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const FormatError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (g.json) {
        json record{{"command", command}, {"inputs", o.inputs}, {"result", o.result}, {"elapsed_ms", elapsed}};
        out << record.dump() << '\n';
    } else if (!o.printed) {
        json shown = o.result;
        shown.erase("coefficients");
        print_text(out, shown);
    }
    return o.code;
}

} // namespace schwarz

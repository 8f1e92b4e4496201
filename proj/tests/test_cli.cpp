#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>
#include <json.hpp>

#include <schwarz/cli.hpp>
#include <schwarz/coeff_io.hpp>

using namespace schwarz;
using nlohmann::json;

namespace
{

constexpr double pi = std::numbers::pi;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "schwarz");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args)
{
    args.push_back("--json");
    const auto r = run(std::move(args));
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::string trivial_file()
{
    return std::string(SCHWARZ_TEST_DATA_DIR) + "/trivial.txt";
}

std::filesystem::path temp_path(const std::string &name)
{
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("nphi")
{
    const auto j = run_json({"nphi", "--class", "kalpha", "--alpha", "0.5", "--grid", "32", "--refine", "4"});
    CHECK(j["command"] == "nphi");
    CHECK(j["inputs"]["alpha"] == 0.5);
    CHECK(std::abs(j["result"]["value"].get<double>() - 1.0) <= 1e-3);
    CHECK(j["result"]["sharp"] == 1.0);
    CHECK(j["result"]["is_lower_bound"] == true);
    CHECK(j["elapsed_ms"].get<double>() >= 0.0);
    CHECK(j["result"]["witness"].contains("s"));

    const auto u = run_json({"nphi", "--class", "ucv", "--grid", "32", "--refine", "4"});
    CHECK(std::abs(u["result"]["value"].get<double>() - 0.81057) <= 1e-3);
    CHECK(std::abs(u["result"]["qc_constant"].get<double>() - 0.40528) <= 5e-5);

    const auto c = run_json({"nphi", "--class", "custom", "--coeffs", trivial_file(), "--grid", "16"});
    CHECK(c["result"]["value"] == 0.0);
    CHECK_FALSE(c["result"].contains("sharp"));
}

TEST_CASE("nphi text output")
{
    const auto r = run({"nphi", "--class", "halfplane", "--a", "0.75", "--grid", "32", "--refine", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value: 1.49") != std::string::npos);
    CHECK(r.out.find("sharp: 1.5") != std::string::npos);
}

TEST_CASE("extremal")
{
    const auto path = temp_path("schwarz_cli_extremal.txt");
    const auto j = run_json({"extremal", "--class", "kalpha", "--alpha", "0.5", "--order", "48", "--out", path.string()});
    CHECK(std::abs(j["result"]["schwarzian_at_0"]["re"].get<double>() - 1.0) <= 1e-12);
    CHECK(std::abs(j["result"]["hyperbolic_norm"]["value"].get<double>() - 1.0) <= 1e-2);
    CHECK(j["result"]["coefficients"].size() == 49u);
    const auto f = read_coefficients(path);
    CHECK(f.order() == 48u);
    CHECK(std::abs(f[3].real() - 0.5 / 3) <= 1e-12);
    std::filesystem::remove(path);

    const auto u = run_json({"extremal", "--class", "ucv", "--order", "48"});
    CHECK(std::abs(u["result"]["schwarzian_at_0"]["re"].get<double>() - 8 / (pi * pi)) <= 1e-12);

    const auto t = run_json({"extremal", "--class", "custom", "--coeffs", trivial_file(), "--order", "16"});
    CHECK(t["result"]["schwarzian_at_0"]["re"] == 0.0);
    CHECK(t["result"]["hyperbolic_norm"]["value"] == 0.0);

    CHECK(run({"extremal", "--class", "ucv", "--out", "/nonexistent/dir/f.txt"}).code == exit_io);
}

TEST_CASE("hypnorm and coeffs")
{
    const auto path = temp_path("schwarz_cli_koebe.txt");
    {
        std::ofstream out(path);
        out << "0 0\n";
        for (int n = 1; n <= 96; ++n) {
            out << n << " 0\n";
        }
    }
    const auto j = run_json({"hypnorm", "--coeffs", path.string(), "--rmax", "0.8"});
    CHECK(std::abs(j["result"]["value"].get<double>() - 6.0) <= 2e-2);
    std::filesystem::remove(path);

    const auto c = run_json({"coeffs", "--class", "kalpha", "--alpha", "0.5", "--order", "10"});
    CHECK(c["result"]["coefficients"][1][0] == 1.0);
    const auto g = run_json({"coeffs", "--what", "g", "--order", "10"});
    CHECK(g["result"]["coefficients"][2][0].get<double>() == doctest::Approx(0.2));

    const auto text = run({"coeffs", "--class", "halfplane", "--a", "0.5", "--order", "8"});
    CHECK(text.code == 0);
    CHECK(text.out.rfind("1 0\n1 0\n", 0) == 0);
}

TEST_CASE("verify")
{
    const auto r = run({"verify", "--lemma", "sum", "--max-n", "200"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS lemma_sum_a") != std::string::npos);

    const auto j = run_json({"verify", "--lemma", "suita", "--grid", "32"});
    REQUIRE(j["result"].size() == 3u);
    for (const auto &rep : j["result"]) {
        CHECK(rep["passed"] == true);
    }
}

TEST_CASE("figure1")
{
    const auto path = temp_path("schwarz_cli_fig1.csv");
    const auto j = run_json({"figure1", "--csv", path.string(), "--step", "0.01", "--crossing"});
    CHECK(j["result"]["rows"] == 99);
    const double root = j["result"]["crossing"]["root"];
    CHECK(root > 0.3354);
    CHECK(root < 0.3355);
    CHECK(std::abs(j["result"]["k1"].get<double>() - 0.52311) <= 5e-5);

    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "alpha,value");
    int rows = 0;
    while (std::getline(in, line)) {
        const auto comma = line.find(',');
        const double alpha = std::stod(line.substr(0, comma));
        const double value = std::stod(line.substr(comma + 1));
        if (std::abs(alpha - 0.2) < 1e-9) {
            CHECK(value < 0.0);
        }
        if (std::abs(alpha - 0.5) < 1e-9) {
            CHECK(value > 0.0);
        }
        ++rows;
    }
    CHECK(rows == 99);
    std::filesystem::remove(path);

    CHECK(run({"figure1", "--csv", "/nonexistent/dir/x.csv"}).code == exit_io);
}

TEST_CASE("usage errors exit with code 2")
{
    CHECK(run({}).code == exit_usage);
    CHECK(run({"bogus"}).code == exit_usage);
    CHECK(run({"nphi"}).code == exit_usage);
    CHECK(run({"nphi", "--class", "kalpha", "--alpha", "1.5"}).code == exit_usage);
    CHECK(run({"nphi", "--class", "custom"}).code == exit_usage);
    CHECK(run({"nphi", "--class", "ucv", "--grid", "4"}).code == exit_usage);
    CHECK(run({"verify", "--lemma", "nope"}).code == exit_usage);
    CHECK(run({"figure1", "--step", "0"}).code == exit_usage);
    CHECK(run({"nphi", "--class", "custom", "--coeffs", "/nonexistent/c.txt"}).code == exit_io);
    CHECK(run({"--help"}).code == exit_ok);
}

TEST_CASE("property: JSON output is deterministic and round-trips")
{
    const std::vector<std::string> args{"nphi", "--class", "halfplane", "--a", "0.6", "--grid", "20", "--json"};
    const auto a = run(args);
    const auto b = run(args);
    auto ja = json::parse(a.out);
    auto jb = json::parse(b.out);
    // Byte-identical re-serialization.
    CHECK(ja.dump() + "\n" == a.out);
    ja.erase("elapsed_ms");
    jb.erase("elapsed_ms");
    CHECK(ja == jb);
}

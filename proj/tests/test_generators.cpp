#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include <schwarz/errors.hpp>
#include <schwarz/generators.hpp>

using namespace schwarz;

namespace
{

constexpr double pi = std::numbers::pi;

std::vector<GeneratorSpec> sample_specs()
{
    return {GeneratorSpec::strongly_convex(0.25), GeneratorSpec::strongly_convex(0.5),
            GeneratorSpec::strongly_convex(1.0),  GeneratorSpec::uniformly_convex(),
            GeneratorSpec::half_plane(0.0),       GeneratorSpec::half_plane(0.75),
            GeneratorSpec::custom(ComplexSeries({1.0, cplx{0.5, 0.25}, -0.3, 0.1}))};
}

} // namespace

TEST_CASE("spec validation")
{
    CHECK_THROWS_AS(GeneratorSpec::strongly_convex(0.0), DomainError);
    CHECK_THROWS_AS(GeneratorSpec::strongly_convex(1.5), DomainError);
    CHECK_NOTHROW(GeneratorSpec::strongly_convex(1.0));
    CHECK_THROWS_AS(GeneratorSpec::half_plane(1.0), DomainError);
    CHECK_THROWS_AS(GeneratorSpec::half_plane(-0.1), DomainError);
    CHECK_THROWS_AS(GeneratorSpec::custom(ComplexSeries({2.0, 1.0})), DomainError);
    CHECK_THROWS_AS(GeneratorSpec::custom(ComplexSeries({cplx{1.0, 0.1}})), DomainError);
    CHECK(GeneratorSpec::strongly_convex(0.5).describe() == "strongly_convex(alpha=0.5)");
}

TEST_CASE("phi_eval")
{
    for (const auto &spec : sample_specs()) {
        CHECK(std::abs(phi_eval(spec, 0.0) - 1.0) < 1e-15);
    }
    CHECK(phi_eval(GeneratorSpec::strongly_convex(1.0), 0.5).real() == doctest::Approx(3.0).epsilon(1e-15));

    // Square-root form at z = 0.25, sqrt z = 0.5: 1 + (2/pi^2) (log 3)^2.
    const double expected = 1.0 + 2.0 / (pi * pi) * std::log(3.0) * std::log(3.0);
    CHECK(phi_eval(GeneratorSpec::uniformly_convex(), 0.25).real() == doctest::Approx(expected).epsilon(1e-14));
    // The same form off the real axis, principal square root.
    const cplx z{0.3, -0.55};
    const cplx w = std::sqrt(z);
    const cplx lg = std::log((1.0 + w) / (1.0 - w));
    CHECK(std::abs(phi_eval(GeneratorSpec::uniformly_convex(), z) - (1.0 + 2.0 / (pi * pi) * lg * lg)) < 1e-13);

    CHECK(std::abs(phi_eval(GeneratorSpec::half_plane(0.25), 0.5) - 2.5) < 1e-15);
    CHECK_THROWS_AS(phi_eval(GeneratorSpec::uniformly_convex(), 1.0), DomainError);
    CHECK_THROWS_AS(phi_eval(GeneratorSpec::strongly_convex(0.5), cplx{0.8, 0.8}), DomainError);
}

TEST_CASE("phi_prime_eval")
{
    for (double alpha : {0.1, 0.5, 1.0}) {
        CHECK(phi_prime_eval(GeneratorSpec::strongly_convex(alpha), 0.0).real() == doctest::Approx(2 * alpha));
    }
    CHECK(phi_prime_eval(GeneratorSpec::uniformly_convex(), 0.0).real() == doctest::Approx(8.0 / (pi * pi)));
    CHECK(phi_prime_eval(GeneratorSpec::half_plane(0.5), 0.0).real() == doctest::Approx(1.0));
    CHECK_THROWS_AS(phi_prime_eval(GeneratorSpec::half_plane(0.5), -1.0), DomainError);
}

TEST_CASE("phi_series")
{
    for (double alpha : {0.2, 0.5, 0.9}) {
        const auto p = phi_series(GeneratorSpec::strongly_convex(alpha), 10);
        CHECK(p[0].real() == doctest::Approx(1.0));
        CHECK(p[1].real() == doctest::Approx(2 * alpha).epsilon(1e-15));
        CHECK(p[2].real() == doctest::Approx(2 * alpha * alpha).epsilon(1e-15));
    }
    const auto u = phi_series(GeneratorSpec::uniformly_convex(), 10);
    CHECK(u[1].real() == doctest::Approx(8.0 / (pi * pi)).epsilon(1e-15));
    const auto h = phi_series(GeneratorSpec::half_plane(0.3), 6);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(h[n].real() == doctest::Approx(1.4));
    }
    // Custom coefficients are an exact polynomial: padding adds zeros.
    const auto c = phi_series(GeneratorSpec::custom(ComplexSeries({1.0, 2.0})), 4);
    CHECK(c == ComplexSeries({1.0, 2.0, 0.0, 0.0, 0.0}));
    CHECK_THROWS_AS(phi_series(GeneratorSpec::uniformly_convex(), 0), DegenerateOrderError);
}

TEST_CASE("g_eval and g_series")
{
    CHECK(g_eval(0.0) == cplx{1.0});
    for (int i = 1; i < 100; ++i) {
        CHECK(g_eval(i / 100.0).real() > 1.0);
    }
    CHECK(g_eval(0.5).real() == doctest::Approx(1.2464504803).epsilon(1e-10));
    const auto g = g_series(50);
    for (std::size_t n = 0; n <= 50; ++n) {
        CHECK(g[n] == cplx{1.0 / (2.0 * n + 1.0)});
    }
    // Both evaluation regimes against a long direct partial sum.
    for (const cplx z : {cplx{0.45, 0.1}, cplx{-0.2, 0.6}, cplx{0.7, -0.3}, cplx{-0.9, 0.0}}) {
        cplx acc{}, pw = 1.0;
        for (int n = 0; n < 5000; ++n) {
            acc += pw / (2.0 * n + 1.0);
            pw *= z;
        }
        CHECK(std::abs(g_eval(z) - acc) < 1e-13);
    }
    CHECK_THROWS_AS(g_eval(1.0), DomainError);
}

TEST_CASE("gamma_of_beta")
{
    CHECK(gamma_of_beta(1e-6) < 1e-5);
    CHECK(gamma_of_beta(1e-6) > 0.0);
    // Independent high-precision evaluation of the formula.
    CHECK(gamma_of_beta(0.5) == doctest::Approx(0.6480000634724548).epsilon(1e-13));
    CHECK(gamma_of_beta(0.3) < gamma_of_beta(0.31));
    CHECK_THROWS_AS(gamma_of_beta(0.0), DomainError);
    CHECK_THROWS_AS(gamma_of_beta(1.0), DomainError);

    double prev = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double g = gamma_of_beta(i / 1000.0);
        CHECK(g > prev);
        CHECK(g < 1.0);
        prev = g;
    }
}

TEST_CASE("gamma_inverse")
{
    CHECK(gamma_inverse(gamma_of_beta(0.4), 1e-13) == doctest::Approx(0.4).epsilon(1e-10));
    const double k1 = std::sin(pi * gamma_inverse(0.5) / 2.0);
    CHECK(k1 == doctest::Approx(0.5231137699023355).epsilon(1e-12));
    CHECK(std::abs(k1 - 0.52311) < 5e-5);
    // gamma(beta) > beta on the whole grid, so gamma^{-1}(alpha) < alpha.
    for (int i = 1; i < 1000; ++i) {
        const double x = i / 1000.0;
        CHECK(gamma_of_beta(x) > x);
        CHECK(gamma_inverse(x) < x);
    }
    CHECK_THROWS_AS(gamma_inverse(0.0), DomainError);
    CHECK_THROWS_AS(gamma_inverse(0.5, 0.0), DomainError);
}

TEST_CASE("figure1 crossing")
{
    const double root = figure1_crossing(1e-6);
    CHECK(root > 0.3354);
    CHECK(root < 0.3355);
    CHECK(figure1_crossing(1e-12) == doctest::Approx(0.3354558367596067).epsilon(1e-10));
    CHECK(std::abs(figure1_value(figure1_crossing(1e-12))) < 1e-10);
    CHECK(figure1_value(0.2) < 0.0);
    CHECK(figure1_value(0.5) > 0.0);
    const auto [lo, hi] = figure1_bracket(1e-8);
    CHECK(hi - lo <= 1e-8);
    CHECK(figure1_value(lo) < 0.0);
    CHECK(figure1_value(hi) > 0.0);
}

TEST_CASE("property: closed forms agree with the expansions")
{
    for (const auto &spec : sample_specs()) {
        const auto s = phi_series(spec, 96);
        for (int k = 0; k < 24; ++k) {
            for (double r : {0.1, 0.3, 0.5}) {
                const cplx z = std::polar(r, 2 * pi * k / 24);
                CHECK(std::abs(phi_eval(spec, z) - eval(s, z)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("property: phi_prime matches central differences")
{
    const double h = 1e-5;
    for (const auto &spec : sample_specs()) {
        for (int k = 0; k < 16; ++k) {
            const cplx z = std::polar(0.3, 2 * pi * k / 16);
            const cplx fd = (phi_eval(spec, z + h) - phi_eval(spec, z - h)) / (2 * h);
            CHECK(std::abs(phi_prime_eval(spec, z) - fd) <= 1e-6);
        }
    }
}

TEST_CASE("property: Loewner bound on P_alpha coefficients")
{
    for (int i = 1; i <= 10; ++i) {
        const double alpha = i / 10.0;
        const auto p = phi_series(GeneratorSpec::strongly_convex(alpha), 96);
        for (std::size_t n = 1; n <= 96; ++n) {
            CHECK(p[n].real() >= -1e-12);
            CHECK(p[n].real() <= 2 * alpha + 1e-12);
        }
    }
}

TEST_CASE("q_from_phi")
{
    for (double alpha : {0.25, 0.5, 1.0}) {
        const auto q = q_from_phi(phi_series(GeneratorSpec::strongly_convex(alpha), 20));
        CHECK(std::abs(q[0]) < 1e-15);
        CHECK(std::abs(q[1]) < 1e-15);
        CHECK(std::abs(q[2]) < 1e-15);
    }
    const auto q = q_from_phi(phi_series(GeneratorSpec::uniformly_convex(), 20));
    CHECK(q[2].real() == doctest::Approx(16.0 / (pi * pi) * (2.0 / 3.0 - 4.0 / (pi * pi))).epsilon(1e-14));
}

TEST_CASE("GeneratorEvaluator agrees with the direct formulas")
{
    for (const auto &spec : sample_specs()) {
        const GeneratorEvaluator ev(spec);
        for (double r : {0.0, 0.01, 0.2, 0.25, 0.26, 0.6, 0.95}) {
            for (int k = 0; k < 12; ++k) {
                const cplx z = std::polar(r, 2 * pi * k / 12 + 0.1);
                const cplx p = phi_eval(spec, z);
                const cplx dp = phi_prime_eval(spec, z);
                const cplx q = 2.0 * z * dp + 1.0 - p * p;
                const double scale = std::max(1.0, std::abs(p * p));
                CHECK(std::abs(ev.phi(z) - p) <= 1e-12 * std::max(1.0, std::abs(p)));
                CHECK(std::abs(ev.phi_prime(z) - dp) <= 1e-12 * std::max(1.0, std::abs(dp)));
                CHECK(std::abs(ev.q(z) - q) <= 1e-12 * scale);
            }
        }
    }
    CHECK(GeneratorEvaluator(GeneratorSpec::uniformly_convex()).real_coefficients());
    CHECK_FALSE(GeneratorEvaluator(sample_specs().back()).real_coefficients());
}

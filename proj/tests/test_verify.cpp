#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "geoe/energy.hpp"
#include "geoe/specialfn.hpp"
#include "geoe/verify.hpp"

using namespace geoe;

namespace {

std::vector<long> parity_grid(std::initializer_list<long> base, int kappa) {
    std::vector<long> out;
    for (long n : base) out.push_back(n + ((n % 2) == kappa ? 0 : 1));
    return out;
}

OrderFitReport fit_riesz(double s, double L, int depth, int kappa,
                         std::initializer_list<long> base) {
    const Parity parity = kappa == 0 ? Parity::even() : Parity::odd();
    const Expansion e = expansion_riesz({s, 0.0}, L, depth, parity);
    return order_fit(
        [&](long n) { return riesz_exact({s, 0.0}, L, n); }, e,
        parity_grid(base, kappa));
}

OrderFitReport fit_log(double L, int depth, int kappa,
                       std::initializer_list<long> base) {
    const Parity parity = kappa == 0 ? Parity::even() : Parity::odd();
    const Expansion e = expansion_riesz({0.0, 0.0}, L, depth, parity);
    return order_fit(
        [&](long n) { return complexd(log_exact(L, n), 0.0); }, e,
        parity_grid(base, kappa));
}

}  // namespace

TEST_CASE("log-log regression helper") {
    // perfect power law y = 3 x^{-2}
    std::vector<std::pair<double, double>> pts;
    for (double x : {8.0, 16.0, 32.0, 64.0}) pts.push_back({x, 3.0 / (x * x)});
    const LogLogFit f = loglog_fit(pts);
    CHECK(f.slope == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::exp(f.intercept) == doctest::Approx(3.0).epsilon(1e-10));
}

TEST_CASE("order fits recover the declared remainder exponents") {
    // Riesz s = 3: depths 1..3 on grids where the remainder still rises
    // above double rounding of the N^4-sized energies
    for (int kappa : {0, 1}) {
        CAPTURE(kappa);
        const auto r1 = fit_riesz(3.0, 2.0 * pi, 1, kappa, {32, 64, 128, 256});
        CHECK(r1.pass);
        CHECK(r1.slope == doctest::Approx(-2.0).epsilon(0.15));
        const auto r2 = fit_riesz(3.0, 2.0 * pi, 2, kappa, {12, 24, 48, 96});
        CHECK(r2.pass);
        CHECK(r2.slope == doctest::Approx(-4.0).epsilon(0.08));
        const auto r3 = fit_riesz(3.0, 2.0 * pi, 3, kappa, {8, 16, 32, 48});
        CHECK(r3.pass);
        CHECK(r3.slope == doctest::Approx(-6.0).epsilon(0.06));

        const auto l1 = fit_log(3.0, 1, kappa, {64, 128, 256, 512});
        CHECK(l1.pass);
        CHECK(l1.slope == doctest::Approx(-2.0).epsilon(0.15));
        const auto l2 = fit_log(3.0, 2, kappa, {16, 32, 64, 128});
        CHECK(l2.pass);
        CHECK(l2.slope == doctest::Approx(-4.0).epsilon(0.08));
    }
}

TEST_CASE("order fit on an exact expansion reports an exact match") {
    const Expansion e = expansion_riesz({-2.0, 0.0}, 3.0, 2, Parity::even());
    const auto rep = order_fit(
        [&](long n) { return riesz_exact({-2.0, 0.0}, 3.0, n); }, e,
        {64, 128, 256, 512, 1024});
    CHECK(rep.exact_match);
    CHECK(rep.pass);
}

TEST_CASE("order fit reports inconclusive when the grid outruns precision") {
    // at this grid only N = 256 resolves the q = 1 remainder above
    // 1e-15 |exact|; fewer than 3 usable points is not a pass
    const Expansion e = expansion_riesz({3.0, 0.0}, 2.0 * pi, 1, Parity::even());
    const auto rep = order_fit(
        [&](long n) { return riesz_exact({3.0, 0.0}, 2.0 * pi, n); }, e,
        {256, 512, 1024, 2048});
    CHECK(rep.inconclusive);
    CHECK(!rep.pass);
    CHECK(!rep.exact_match);
}

TEST_CASE("optimality search rejects complex-valued kernels") {
    CHECK_THROWS_AS(
        optimality_search(RieszKernel{{1.0, 2.0}, false},
                          OptimalityCase::equally_spaced, 1.0, 3, 2, 1),
        std::invalid_argument);
}

TEST_CASE("order fit input validation") {
    const Expansion e = expansion_riesz({3.0, 0.0}, 2.0, 2, Parity::even());
    CHECK_THROWS_AS(order_fit([&](long n) { return riesz_exact({3.0, 0.0}, 2.0, n); },
                              e, {64, 128, 256}),
                    std::invalid_argument);
}

TEST_CASE("optimality: equally spaced points minimize convex decreasing kernels") {
    const Kernel k = RieszKernel{{2.0, 0.0}, false};
    const auto rep = optimality_search(k, OptimalityCase::equally_spaced, 1.0,
                                       5, 50, 42);
    CHECK(rep.pass);
    CHECK(rep.best_energy >=
          rep.reference_energy - 1e-9 * std::abs(rep.reference_energy));
    // gauge-fixed minimizer is equal spacing itself
    REQUIRE(rep.best_positions.size() == 5);
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(rep.best_positions[i] - i * 0.2) < 1e-5);
}

TEST_CASE("optimality: antipodal systems minimize concave decreasing kernels") {
    const Kernel k = RieszKernel{{-2.0, 0.0}, true};  // f(x) = -x^2
    const auto rep =
        optimality_search(k, OptimalityCase::antipodal, 1.0, 6, 30, 7);
    CHECK(rep.pass);
    // the reference is attained (not just bounded)
    CHECK(std::abs(rep.best_energy - rep.reference_energy) <=
          1e-8 * std::abs(rep.reference_energy));
}

TEST_CASE("optimality: s = -1 ties equally spaced and antipodal") {
    const Kernel k = RieszKernel{{-1.0, 0.0}, true};  // f(x) = -x
    const double L = 1.0;
    const long n = 4;
    Configuration eq;
    eq.curve.length = L;
    for (long i = 0; i < n; ++i) eq.positions.push_back(i * L / n);
    const double equal_energy = brute_force_energy(k, eq).real();
    const double anti_energy =
        antipodal_energy(eval_kernel(k, L / 2.0), n).real();
    CHECK(equal_energy == doctest::Approx(anti_energy).epsilon(1e-12));
    CHECK(equal_energy ==
          doctest::Approx(-(L / 4.0) * (n * n - n % 2)).epsilon(1e-12));
}

TEST_CASE("optimality search is deterministic in the seed") {
    const Kernel k = RieszKernel{{2.0, 0.0}, false};
    const auto a = optimality_search(k, OptimalityCase::equally_spaced, 1.0,
                                     4, 10, 333);
    const auto b = optimality_search(k, OptimalityCase::equally_spaced, 1.0,
                                     4, 10, 333);
    CHECK(a.best_energy == b.best_energy);
    CHECK(a.reference_energy == b.reference_energy);
    REQUIRE(a.best_positions.size() == b.best_positions.size());
    for (size_t i = 0; i < a.best_positions.size(); ++i)
        CHECK(a.best_positions[i] == b.best_positions[i]);
}

TEST_CASE("optimality search never undercuts the convex reference") {
    const Kernel k = RieszKernel{{2.0, 0.0}, false};
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto rep = optimality_search(k, OptimalityCase::equally_spaced,
                                           1.0, 4, 20, seed);
        CHECK(rep.best_energy >=
              rep.reference_energy - 1e-9 * std::abs(rep.reference_energy));
    }
}

TEST_CASE("theorem bound for the s = 1 energy holds with theta in (0,1]") {
    for (double L : {2.0, 2.0 * pi}) {
        for (int q : {1, 2}) {
            for (int kappa : {0, 1}) {
                const Parity parity =
                    kappa == 0 ? Parity::even() : Parity::odd();
                const double worst =
                    riesz1_bound_worst_ratio(L, q, 10, 400, parity);
                CAPTURE(L);
                CAPTURE(q);
                CAPTURE(kappa);
                CHECK(worst <= 1.0 + 1e-9);
                CHECK(worst > 0.0);
            }
        }
    }
}

TEST_CASE("identity suite passes") {
    const IdentityReport rep = identity_suite();
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.pass);
    }
    CHECK(rep.all_pass);
    CHECK(rep.checks.size() >= 6);
}

TEST_CASE("report serialization") {
    {
        const Expansion e = expansion_riesz({3.0, 0.0}, 2.0 * pi, 2, Parity::even());
        const auto rep = order_fit(
            [&](long n) { return riesz_exact({3.0, 0.0}, 2.0 * pi, n); }, e,
            {12, 24, 48, 96});
        nlohmann::json j = rep;
        CHECK(j.at("pass").get<bool>() == rep.pass);
        CHECK(j.at("slope").get<double>() == rep.slope);
        CHECK(j.at("declared_exponent").get<double>() == rep.declared_exponent);
    }
    {
        const auto rep = optimality_search(RieszKernel{{2.0, 0.0}, false},
                                           OptimalityCase::equally_spaced, 1.0,
                                           3, 5, 1);
        nlohmann::json j = rep;
        CHECK(j.at("best_energy").get<double>() == rep.best_energy);
        CHECK(j.at("restarts").get<int>() == 5);
    }
}

#include <cmath>
#include <memory>

#include "doctest.h"
#include "oracles.hpp"
#include "tms21/errors.hpp"
#include "tms21/grid.hpp"
#include "tms21/legendre.hpp"
#include "tms21/quadrature.hpp"

using namespace tms21;

TEST_SUITE("numerics") {

TEST_CASE("gauss rule integrates polynomials exactly") {
    const GaussRule r = gauss_legendre(6);
    double s0 = 0, s10 = 0;
    for (int i = 0; i < 6; ++i) {
        s0 += r.w[i];
        s10 += r.w[i] * std::pow(r.x[i], 10);
    }
    CHECK(s0 == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s10 == doctest::Approx(2.0 / 11.0).epsilon(1e-13));
}

TEST_CASE("single panel on [1,2] reproduces the constant") {
    const RadialGrid g = build_grid(1, 4, 1.0, 2.0, Measure::L2);
    CHECK(!g.has_head);  // r_min = 1 is a deliberate boundary
    CHECK(std::abs(g.weights.sum() - 1.0) < 1e-12);
}

TEST_CASE("gaussian integral on the 8x16 grid") {
    const RadialGrid g = build_grid(8, 16, 1e-4, 1e4, Measure::L2);
    CHECK(g.has_head);  // tiny r_min is a truncation artifact: close the gap
    Eigen::VectorXd f(g.size());
    for (int i = 0; i < g.size(); ++i) f[i] = std::exp(-g.nodes[i] * g.nodes[i]);
    const double got = grid_integrate(g, f);
    CHECK(std::abs(got - std::sqrt(M_PI) / 2.0) < 1e-8);

    SUBCASE("doubling the panels leaves the value unchanged") {
        const RadialGrid g2 = build_grid(16, 16, 1e-4, 1e4, Measure::L2);
        Eigen::VectorXd f2(g2.size());
        for (int i = 0; i < g2.size(); ++i) f2[i] = std::exp(-g2.nodes[i] * g2.nodes[i]);
        const RadialGrid g4 = build_grid(32, 16, 1e-4, 1e4, Measure::L2);
        Eigen::VectorXd f4(g4.size());
        for (int i = 0; i < g4.size(); ++i) f4[i] = std::exp(-g4.nodes[i] * g4.nodes[i]);
        CHECK(std::abs(grid_integrate(g4, f4) - grid_integrate(g2, f2)) < 1e-10);
    }
}

TEST_CASE("gamma integrals on the default grid") {
    const RadialGrid g = default_grid(Measure::L2);
    for (int k : {0, 2, 4}) {
        Eigen::VectorXd f(g.size());
        for (int i = 0; i < g.size(); ++i) f[i] = std::pow(g.nodes[i], k) * std::exp(-g.nodes[i]);
        double gamma = 1.0;
        for (int j = 2; j <= k; ++j) gamma *= j;
        CHECK(std::abs(grid_integrate(g, f) - gamma) < 1e-8);
    }
}

TEST_CASE("grid invariants") {
    const RadialGrid g = default_grid(Measure::Hminus12);
    for (int i = 1; i < g.size(); ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
    CHECK(g.nodes[0] > 0.0);
    CHECK(g.nodes[g.size() - 1] <= g.r_max);
    CHECK(g.weights.minCoeff() > 0.0);
    // head panel present: weights integrate the constant over [0, r_max]
    CHECK(g.weights.sum() == doctest::Approx(g.r_max).epsilon(1e-10));
    CHECK(g.id() == build_grid(48, 12, 1e-4, 1e4, Measure::Hminus12).id());

    CHECK_THROWS_AS(build_grid(4, 8, -1.0, 2.0, Measure::L2), DomainError);
    CHECK_THROWS_AS(build_grid(4, 8, 2.0, 1.0, Measure::L2), DomainError);
    CHECK_THROWS_AS(build_grid(0, 8, 1.0, 2.0, Measure::L2), DomainError);
}

TEST_CASE("legendre Q closed forms") {
    CHECK(legendre_Q(0, 2.0) == doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-14));
    CHECK(legendre_Q(1, 2.0) == doctest::Approx(std::log(3.0) - 1.0).epsilon(1e-13));
    CHECK_THROWS_AS(legendre_Q(0, 1.0), DomainError);
    CHECK_THROWS_AS(legendre_Q(9, 2.0), DomainError);
    CHECK_THROWS_AS(legendre_Q(-1, 2.0), DomainError);
}

TEST_CASE("legendre Q against the defining integral") {
    // int_{-1}^{1} P_ell(y) / (z - y) dy = 2 Q_ell(z)
    for (int ell = 0; ell <= 8; ++ell) {
        for (double z : {1.01, 1.5, 2.0, 10.0, 1e3}) {
            const double direct = oracle::adaptive_quad(
                [&](double y) { return legendre_P(ell, y) / (z - y); }, -1.0, 1.0,
                1e-13 * legendre_Q(ell, z) + 1e-305);
            CHECK(legendre_Q(ell, z) ==
                  doctest::Approx(0.5 * direct).epsilon(1e-9));
        }
    }
}

TEST_CASE("legendre Q(2, 1.5) matches quadrature") {
    const double direct = oracle::adaptive_quad(
        [&](double y) { return legendre_P(2, y) / (1.5 - y); }, -1.0, 1.0, 1e-13);
    CHECK(legendre_Q(2, 1.5) == doctest::Approx(0.5 * direct).epsilon(1e-10));
}

TEST_CASE("legendre Q positive and decreasing in z") {
    for (int ell = 0; ell <= 8; ++ell) {
        double prev = legendre_Q(ell, 1.0 + 1e-3);
        CHECK(prev > 0.0);
        for (double lz = -2.0; lz <= 4.0; lz += 0.25) {
            const double q = legendre_Q(ell, 1.0 + std::pow(10.0, lz));
            CHECK(q > 0.0);
            CHECK(q < prev);
            prev = q;
        }
    }
}

TEST_CASE("legendre Q derivative") {
    CHECK(legendre_Q_deriv(0, 2.0) == doctest::Approx(-1.0 / 3.0).epsilon(1e-14));
    CHECK(std::abs(legendre_Q_deriv(0, 1e8)) < 1e-15);
    for (int ell = 0; ell <= 8; ++ell) {
        for (double z : {1.05, 1.3, 1.7, 2.0, 5.0, 50.0}) {
            const double h = 1e-6 * z;
            const double fd = (legendre_Q(ell, z + h) - legendre_Q(ell, z - h)) / (2.0 * h);
            CHECK(legendre_Q_deriv(ell, z) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("charge construction and norms") {
    auto grid = std::make_shared<RadialGrid>(default_grid(Measure::L2));
    const Charge c = sample_charge(grid, 0, 0, [](double r) { return std::exp(-r); });
    // L2 norm^2 of e^{-r} against r^2 dr = Gamma(3) / 2^3 = 1/4
    CHECK(charge_norm_sq(c, Measure::L2) == doctest::Approx(0.25).epsilon(1e-10));

    SUBCASE("tail-extended norm matches the closed form") {
        // f(r) = r^{-2} beyond r_max: int_{rmax}^inf r^2 r^{-4} dr = 1/rmax
        const Charge t = sample_charge(grid, 0, 0, [](double r) { return std::exp(-r); },
                                       Tail{2.0, 1.0});
        const double extra = charge_norm_sq(t, Measure::L2) - charge_norm_sq(c, Measure::L2);
        CHECK(extra == doctest::Approx(1.0 / grid->r_max).epsilon(1e-8));
    }

    SUBCASE("divergent tails flag as infinite") {
        const Charge t = sample_charge(grid, 0, 0, [](double r) { return std::exp(-r); },
                                       Tail{1.4, 1.0});
        CHECK(std::isinf(charge_norm_sq(t, Measure::L2)));
        CHECK(std::isfinite(charge_norm_sq(t, Measure::Hminus12)));
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(make_charge(nullptr, 0, 0, Eigen::VectorXd::Zero(3)), DomainError);
        CHECK_THROWS_AS(make_charge(grid, 1, 2, Eigen::VectorXd::Zero(grid->size())),
                        DomainError);
        CHECK_THROWS_AS(make_charge(grid, 0, 0, Eigen::VectorXd::Zero(3)), DomainError);
    }
}

TEST_CASE("measure weights") {
    CHECK(measure_weight(Measure::L2, 2.0) == doctest::Approx(4.0));
    CHECK(measure_weight(Measure::Hminus12, 2.0) == doctest::Approx(4.0 / std::sqrt(5.0)));
    CHECK(measure_weight(Measure::Hplus12, 2.0) == doctest::Approx(4.0 * std::sqrt(5.0)));
    CHECK_THROWS_AS(measure_weight(Measure::WLambda, 1.0), DomainError);
}

}  // TEST_SUITE

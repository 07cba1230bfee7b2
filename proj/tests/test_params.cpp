#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "tms21/errors.hpp"
#include "tms21/params.hpp"

using namespace tms21;

// reference values computed with 40-digit arithmetic from the defining
// formulas (mu, nu, Lambda) and from root solves on the closed-form C
namespace {
constexpr double kMStar = 0.0734917704801;
constexpr double kMStarStar = 0.11602843587;
constexpr double kMMinlos = 0.0812143207732;
constexpr double kMQuarter = 0.075295334536;
constexpr double kLambdaAt1 = 0.136877054458;
}  // namespace

TEST_SUITE("params") {

TEST_CASE("derive_params") {
    const ModelParams p = derive_params(1.0, 1.0, 0.0);
    CHECK(p.mu == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(p.nu == doctest::Approx(0.75).epsilon(1e-15));

    const ModelParams big = derive_params(1e6, 1.0, 0.0);
    CHECK(std::abs(big.mu - 2e-6) < 1e-5);
    CHECK(std::abs(big.nu - 1.0) < 1e-5);

    const ModelParams q = derive_params(0.0734916, 2.0, -1.0);
    CHECK(q.mu == doctest::Approx(1.8630793199).epsilon(1e-9));
    CHECK(q.nu == doctest::Approx(0.1322338620).epsilon(1e-9));
    CHECK(q.nu == doctest::Approx(1.0 - q.mu * q.mu / 4.0).epsilon(1e-14));

    CHECK_THROWS_AS(derive_params(0.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(derive_params(1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(derive_params(-2.0, 1.0, 0.0), DomainError);
}

TEST_CASE("efimov function values") {
    CHECK(efimov_lambda(1.0) == doctest::Approx(kLambdaAt1).epsilon(1e-9));
    CHECK(efimov_lambda(1.0 / 13.607) == doctest::Approx(1.0).epsilon(1e-3));
    const double m = 1e6;
    const double asym = 2.0 / (3.0 * M_PI) / (m + 1.0);
    CHECK(efimov_lambda(m) == doctest::Approx(asym).epsilon(1e-2));
    CHECK_THROWS_AS(efimov_lambda(0.0), DomainError);
}

TEST_CASE("efimov function strictly decreasing") {
    double prev = efimov_lambda(1e-3);
    for (double lm = -2.5; lm <= 3.0; lm += 0.25) {
        const double v = efimov_lambda(std::pow(10.0, lm));
        CHECK(v < prev);
        CHECK(v > 0.0);
        prev = v;
    }
}

TEST_CASE("cancellation functional at the paper roots") {
    CHECK(std::abs(cancellation_c(0.0, 1.0 / 13.607)) < 1e-3);
    CHECK(std::abs(cancellation_c(1.0, 1.0 / 8.62)) < 1e-3);
    CHECK(std::abs(cancellation_c(0.5, 1.0 / 12.315)) < 1e-3);
}

TEST_CASE("cancellation functional monotone") {
    // decreasing in s at fixed m
    for (double m : {0.08, 0.1, 0.3}) {
        double prev = cancellation_c(0.0, m);
        for (double s = 0.1; s <= 1.0; s += 0.1) {
            const double v = cancellation_c(s, m);
            CHECK(v < prev);
            prev = v;
        }
    }
    // increasing in m at fixed s
    for (double s : {0.0, 0.5, 1.0}) {
        double prev = cancellation_c(s, 0.05);
        for (double m : {0.08, 0.12, 0.3, 1.0, 3.0}) {
            const double v = cancellation_c(s, m);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("closed-form C against the printed-order brute force") {
    // 5x5 (s, m) grid; the r-cutoff 1e6 leaves a tail below 1e-6 for s <= 0.9
    for (double s : {0.0, 0.25, 0.5, 0.75, 0.9}) {
        for (double m : {0.08, 0.1, 0.3, 1.0, 5.0}) {
            const double closed = cancellation_c(s, m);
            const double brute = oracle::c_bruteforce(s, m, 1e6);
            CHECK(std::abs(closed - brute) < 1e-6);
        }
    }
}

TEST_CASE("threshold roots") {
    CHECK(solve_m_of_s(0.0) == doctest::Approx(kMStar).epsilon(1e-7));
    CHECK(solve_m_of_s(1.0) == doctest::Approx(kMStarStar).epsilon(1e-7));
    CHECK(solve_m_of_s(0.5) == doctest::Approx(kMMinlos).epsilon(1e-7));
    // independent oracle: bisection on the brute-force functional
    CHECK(solve_m_of_s(0.25) == doctest::Approx(kMQuarter).epsilon(1e-7));
    CHECK(solve_m_of_s(0.25) ==
          doctest::Approx(oracle::m_of_s_bruteforce(0.25)).epsilon(1e-6));
}

TEST_CASE("m(s) strictly increasing and invertible") {
    double prev = 0.0;
    for (double s = 0.0; s <= 1.0; s += 0.125) {
        const double m = solve_m_of_s(s);
        CHECK(m > prev);
        prev = m;
        if (s > 0.0 && s < 1.0) {
            CHECK(solve_s_of_m(m) == doctest::Approx(s).epsilon(1e-6));
        }
    }
}

TEST_CASE("solve_s_of_m domain") {
    CHECK_THROWS_WITH_AS(solve_s_of_m(0.2), doctest::Contains("outside the bracket"),
                         DomainError);
    CHECK_THROWS_AS(solve_s_of_m(0.05), DomainError);
}

TEST_CASE("thresholds report") {
    const ThresholdReport rep = thresholds();
    CHECK(rep.m_star == doctest::Approx(kMStar).epsilon(1e-8));
    CHECK(rep.m_star_star == doctest::Approx(kMStarStar).epsilon(1e-7));
    CHECK(rep.m_minlos == doctest::Approx(kMMinlos).epsilon(1e-7));
    CHECK(rep.m_star == doctest::Approx(1.0 / 13.607).epsilon(5e-4));
    CHECK(rep.m_star_star == doctest::Approx(1.0 / 8.62).epsilon(5e-3));
    CHECK(rep.m_minlos == doctest::Approx(1.0 / 12.315).epsilon(5e-3));
    // ordering and the cross-characterization of m*
    CHECK(rep.m_star < rep.m_minlos);
    CHECK(rep.m_minlos < rep.m_star_star);
    CHECK(std::abs(rep.m_of_s0 - rep.m_star) <= 1e-4 * rep.m_star);
    CHECK(rep.residuals[0] <= 1e-10);
    CHECK(rep.residuals[1] <= 1e-8);
    CHECK(rep.residuals[2] <= 1e-8);
    for (int it : rep.iterations) CHECK(it > 0);
}

TEST_CASE("G1 series branch is continuous at the seam") {
    // the branch switch sits at B/A = 1e-3, i.e. near r = 1e-3/mu and
    // r = 1e3 mu; both branches are accurate there and must agree
    for (double mu : {0.5, 1.0, 1.9}) {
        for (double r_star : {1e-3 / mu, 1e3 * mu}) {
            const double below = cancellation_g1(r_star * (1.0 - 1e-9), mu);
            const double above = cancellation_g1(r_star * (1.0 + 1e-9), mu);
            CHECK(below == doctest::Approx(above).epsilon(1e-7));
        }
    }
    SUBCASE("deep series region agrees with high-precision reference") {
        // mu = 1, r = 1e-4: G1 = -(2/3) B/A^2 - ... with B = 1e-4, A = 1 + 1e-8
        const double ref = -6.666666573333334e-05;  // 40-digit evaluation
        CHECK(cancellation_g1(1e-4, 1.0) == doctest::Approx(ref).epsilon(1e-12));
    }
}

}  // TEST_SUITE

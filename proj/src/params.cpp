#include "tms21/params.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "tms21/errors.hpp"
#include "tms21/quadrature.hpp"

namespace tms21 {

ModelParams derive_params(double m, double lambda, double alpha) {
    if (!(m > 0.0)) throw DomainError("derive_params: need m > 0");
    if (!(lambda > 0.0)) throw DomainError("derive_params: need lambda > 0");
    ModelParams p;
    p.m = m;
    p.mu = 2.0 / (m + 1.0);
    p.nu = m * (m + 2.0) / ((m + 1.0) * (m + 1.0));
    p.lambda = lambda;
    p.alpha = alpha;
    return p;
}

double efimov_lambda(double m) {
    if (!(m > 0.0)) throw DomainError("efimov_lambda: need m > 0");
    const double mp1 = m + 1.0;
    return (2.0 / M_PI) * mp1 * mp1 * (1.0 / std::sqrt(m * (m + 2.0)) - std::asin(1.0 / mp1));
}

double cancellation_g1(double r, double mu) {
    const double A = r * r + 1.0;
    const double B = mu * r;
    const double x = B / A;
    if (x < 1e-3) {
        // 2/B - (A/B^2) log((A+B)/(A-B)) = -(2/3) B/A^2 - (2/5) B^3/A^4 - ...
        const double x2 = x * x;
        return -(x / A) * (2.0 / 3.0 + x2 * (2.0 / 5.0 + x2 * (2.0 / 7.0 + x2 * 2.0 / 9.0)));
    }
    return 2.0 / B - (A / (B * B)) * std::log((A + B) / (A - B));
}

namespace {

constexpr double kCTol = 1e-9;

// int_a^1 r^s G1 dr for a in [0, 1); the integrand vanishes like r^{1+s}
// at the origin, so truncating at 1e-22 is exact to double precision.
double c_piece_below_one(double s, double mu, double a) {
    const double lo = std::max(a, 1e-22);
    if (lo >= 1.0) return 0.0;
    return integrate_doubling([&](double r) { return std::pow(r, s) * cancellation_g1(r, mu); },
                              lo, 1.0, kCTol);
}

// int_b^inf r^s G1 dr for b >= 1, mapped by r -> 1/t onto (0, 1/b]; the
// mapped integrand behaves like t^{1-s} near 0.
double c_piece_above(double s, double mu, double b) {
    const double t_hi = 1.0 / b;
    const double t_lo = 1e-22;
    if (t_hi <= t_lo) return 0.0;
    return integrate_doubling(
        [&](double t) { return std::pow(t, -s) * cancellation_g1(1.0 / t, mu) / (t * t); },
        t_lo, t_hi, kCTol);
}

}  // namespace

double cancellation_r_integral(double s, double mu, double lower) {
    if (!(lower >= 0.0)) throw DomainError("cancellation_r_integral: need lower >= 0");
    if (lower < 1.0) return c_piece_below_one(s, mu, lower) + c_piece_above(s, mu, 1.0);
    return c_piece_above(s, mu, lower);
}

double cancellation_c(double s, double m) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("cancellation_c: need s in [0, 1]");
    if (!(m > 0.0)) throw DomainError("cancellation_c: need m > 0");
    const double mu = 2.0 / (m + 1.0);
    const double nu = m * (m + 2.0) / ((m + 1.0) * (m + 1.0));
    return M_PI * std::sqrt(nu) + cancellation_r_integral(s, mu, 0.0);
}

double solve_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol_residual, double tol_x, int* iterations_out) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw DomainError("solve_root: not bracketed on [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
    int iters = 0;
    double x = lo, fx = flo;
    for (; iters < 200; ++iters) {
        // bisection midpoint, refined by a secant step on odd iterations;
        // forcing plain bisection every other step keeps the bracket shrinking
        double mid = 0.5 * (lo + hi);
        const double denom = fhi - flo;
        if (iters % 2 == 1 && denom != 0.0) {
            const double sec = lo - flo * (hi - lo) / denom;
            const double pad = 1e-3 * (hi - lo);
            if (sec > lo + pad && sec < hi - pad) mid = sec;
        }
        x = mid;
        fx = f(x);
        if (std::abs(fx) <= tol_residual) break;
        if (flo * fx <= 0.0) {
            hi = x;
            fhi = fx;
        } else {
            lo = x;
            flo = fx;
        }
        if (hi - lo <= tol_x * std::max(1.0, std::abs(hi))) break;
    }
    if (iterations_out) *iterations_out = iters;
    if (std::abs(fx) > tol_residual)
        throw NumericError("solve_root: residual tolerance not met", fx);
    return x;
}

double solve_m_of_s(double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("solve_m_of_s: need s in [0, 1]");
    return solve_root([&](double m) { return cancellation_c(s, m); }, 1e-3, 1.0, 1e-8);
}

double solve_s_of_m(double m) {
    const double c0 = cancellation_c(0.0, m);
    const double c1 = cancellation_c(1.0, m);
    // C decreases in s: need C(0,m) > 0 > C(1,m), i.e. m inside (m*, m**)
    if (!(c0 > 0.0 && c1 < 0.0))
        throw DomainError("solve_s_of_m: m = " + std::to_string(m) +
                          " outside the bracket (m*, m**) = (0.0734918, 0.1160284)");
    return solve_root([&](double s) { return cancellation_c(s, m); }, 0.0, 1.0, 1e-8);
}

ThresholdReport thresholds() {
    ThresholdReport rep;
    rep.m_star = solve_root([](double m) { return efimov_lambda(m) - 1.0; }, 1e-3, 1.0, 1e-10,
                            1e-14, &rep.iterations[0]);
    rep.residuals[0] = std::abs(efimov_lambda(rep.m_star) - 1.0);
    rep.m_star_star = solve_root([](double m) { return cancellation_c(1.0, m); }, 1e-3, 1.0, 1e-8,
                                 1e-14, &rep.iterations[1]);
    rep.residuals[1] = std::abs(cancellation_c(1.0, rep.m_star_star));
    rep.m_minlos = solve_root([](double m) { return cancellation_c(0.5, m); }, 1e-3, 1.0, 1e-8,
                              1e-14, &rep.iterations[2]);
    rep.residuals[2] = std::abs(cancellation_c(0.5, rep.m_minlos));
    rep.m_of_s0 = solve_m_of_s(0.0);
    if (std::abs(rep.m_of_s0 - rep.m_star) > 1e-4 * rep.m_star)
        throw NumericError("thresholds: C(0, .) root disagrees with the Efimov root",
                           rep.m_of_s0 - rep.m_star);
    return rep;
}

}  // namespace tms21

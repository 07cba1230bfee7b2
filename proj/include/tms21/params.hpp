#pragma once

#include <array>
#include <functional>

namespace tms21 {

/// Model parameters of the 2+1 system: mass ratio m of the third particle,
/// derived couplings mu = 2/(m+1) and nu = 1 - mu^2/4 = m(m+2)/(m+1)^2,
/// spectral shift lambda > 0 and contact parameter alpha.
/// alpha = infinity is never stored; that case is the Friedrichs selection
/// in the extensions module.
struct ModelParams {
    double m = 1.0;
    double mu = 1.0;
    double nu = 0.75;
    double lambda = 1.0;
    double alpha = 0.0;
};

ModelParams derive_params(double m, double lambda, double alpha);

/// Efimov transcendental function
/// Lambda(m) = (2/pi)(m+1)^2 (1/sqrt(m(m+2)) - asin(1/(m+1))),
/// positive and strictly decreasing for m > 0.
double efimov_lambda(double m);

/// Cancellation functional of the threshold integral equation,
///   C(s, m) = pi sqrt(nu) + int_0^inf r^s G1(r; mu) dr,
/// where G1(r; mu) = int_{-1}^{1} y / (r^2 + 1 + mu r y) dy is evaluated in
/// closed form so the r-integral converges absolutely for s in [0, 1].
/// C(., m) decreases in s, C(s, .) increases in m; its zero defines the
/// threshold curve s <-> m.
double cancellation_c(double s, double m);

/// Closed-form inner integral G1(r; mu) with a small-argument series to
/// avoid cancellation when mu r / (r^2 + 1) is tiny.
double cancellation_g1(double r, double mu);

/// int_{lower}^{inf} r^s G1(r; mu) dr for lower >= 0 (the r-integral of the
/// cancellation functional, also needed with a cutoff by the zeromode probe).
double cancellation_r_integral(double s, double mu, double lower);

/// Unique m with C(s, m) = 0, bracketed in (1e-3, 1).
double solve_m_of_s(double s);

/// Inverse map; requires m strictly between the s=0 and s=1 roots.
double solve_s_of_m(double m);

/// Mass thresholds and root-finding diagnostics.
struct ThresholdReport {
    double m_star = 0.0;       // root of Lambda(m) = 1 (stability)
    double m_star_star = 0.0;  // root of C(1, .) = 0 (uniqueness)
    double m_minlos = 0.0;     // root of C(1/2, .) = 0 (L2 deficiency)
    double m_of_s0 = 0.0;      // root of C(0, .) = 0, cross-check of m_star
    std::array<double, 3> residuals{};   // |Lambda-1|, |C(1,.)|, |C(1/2,.)| at the roots
    std::array<int, 3> iterations{};
};

/// Solves all three thresholds; verifies that the C(0, .) root agrees with
/// the Lambda root within 1e-4 relative.
ThresholdReport thresholds();

/// Bracketing bisection refined by secant steps. Stops when |f| <= tol_residual
/// or the bracket shrinks below tol_x relative. iterations_out is optional.
double solve_root(const std::function<double(double)>& f, double lo, double hi,
                  double tol_residual, double tol_x = 1e-14, int* iterations_out = nullptr);

}  // namespace tms21

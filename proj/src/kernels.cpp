#include "tms21/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tms21/errors.hpp"
#include "tms21/legendre.hpp"
#include "tms21/quadrature.hpp"

namespace tms21 {

namespace {

constexpr double kSeriesCut = 1e-3;  // B/A below which the descending series is used

// int_{-1}^1 y^k P_ell(y) dy for k = ell + 2j:
//   2^{ell+1} (ell+2j)! (ell+j)! / (j! (2ell+2j+1)!)
double moment(int ell, int j) {
    double v = std::pow(2.0, ell + 1);
    // (ell+2j)! / (2 ell + 2 j + 1)! = 1 / prod_{k=ell+2j+1}^{2ell+2j+1} k
    for (int k = ell + 2 * j + 1; k <= 2 * ell + 2 * j + 1; ++k) v /= k;
    // (ell+j)! / j!
    for (int k = j + 1; k <= ell + j; ++k) v *= k;
    return v;
}

// Series  int P_ell/(A+By) dy = (-1)^ell (1/A) sum_j moment(ell,j) (B/A)^{ell+2j}
// and its -d/dA counterpart for the squared denominator.
double series_fraction(int ell, double A, double B, bool squared) {
    const double x = B / A;
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    double xpow = std::pow(x, ell);
    double sum = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double mom = moment(ell, j);
        const double term =
            squared ? mom * (ell + 2.0 * j + 1.0) * xpow : mom * xpow;
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        xpow *= x * x;
    }
    return squared ? sign * sum / (A * A) : sign * sum / A;
}

void check_AB(double A, double B) {
    if (!(A > 0.0) || !(B >= 0.0) || !(A > B))
        throw DomainError("legendre_fraction_integral: need A > B >= 0");
}

}  // namespace

double legendre_fraction_integral(int ell, double A, double B) {
    check_AB(A, B);
    if (B / A < kSeriesCut) return series_fraction(ell, A, B, /*squared=*/false);
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    return sign * (2.0 / B) * legendre_Q(ell, A / B);
}

double legendre_fraction_integral_sq(int ell, double A, double B) {
    check_AB(A, B);
    if (B / A < kSeriesCut) return series_fraction(ell, A, B, /*squared=*/true);
    const double sign = (ell % 2 == 0) ? -1.0 : 1.0;  // (-1)^{ell+1}
    return sign * (2.0 / (B * B)) * legendre_Q_deriv(ell, A / B);
}

double kernel_T(const KernelSpec& spec, double r, double r_prime) {
    if (!(r > 0.0) || !(r_prime > 0.0)) throw DomainError("kernel_T: need positive radii");
    const double A = r * r + r_prime * r_prime + spec.lambda;
    const double B = spec.mu * r * r_prime;
    return 2.0 * M_PI * r_prime * r_prime * legendre_fraction_integral(spec.ell, A, B);
}

double kernel_W(const KernelSpec& spec, double r, double r_prime) {
    if (!(r > 0.0) || !(r_prime > 0.0)) throw DomainError("kernel_W: need positive radii");
    const double A = r * r + r_prime * r_prime + spec.lambda;
    const double B = spec.mu * r * r_prime;
    return -2.0 * 2.0 * M_PI * r_prime * r_prime * legendre_fraction_integral_sq(spec.ell, A, B);
}

double diag_T(const KernelSpec& spec, double r) {
    return 2.0 * M_PI * M_PI * std::sqrt(spec.nu * r * r + spec.lambda) + spec.alpha;
}

double diag_W(const KernelSpec& spec, double r) {
    return 2.0 * M_PI * M_PI / std::sqrt(spec.nu * r * r + spec.lambda);
}

double ball_integral_free(const KernelSpec& spec, double p1, double R, int k) {
    if (!(p1 > 0.0) || !(R > 0.0)) throw DomainError("ball_integral_free: need p1, R > 0");
    if (k != 1 && k != 2) throw DomainError("ball_integral_free: k must be 1 or 2");
    // 2 pi int_0^R q^2 L_k(A(q), B(q)) dq with the ell = 0 angular step
    auto f = [&](double q) {
        const double A = p1 * p1 + q * q + spec.lambda;
        const double B = spec.mu * p1 * q;
        const double L = (k == 1) ? legendre_fraction_integral(0, A, B)
                                  : legendre_fraction_integral_sq(0, A, B);
        return q * q * L;
    };
    // head panel [0, h] + geometric body; integrand is smooth
    const double h = std::min(1e-3, 0.5 * R);
    double v = integrate_doubling(f, 0.0, h, 1e-10, 4);
    v += integrate_doubling(f, h, R, 1e-10, 16);
    return 2.0 * M_PI * v;
}

double snap_to_panel_edge(const RadialGrid& g, double R) {
    if (!(R > 0.0)) throw DomainError("snap_to_panel_edge: need R > 0");
    if (R > g.r_max * (1.0 + 1e-12))
        throw DomainError("snap_to_panel_edge: grid covers only (0, " + std::to_string(g.r_max) +
                          "], requested R = " + std::to_string(R));
    double best = 0.0;
    for (double e : g.panel_edges)
        if (e <= R * (1.0 + 1e-12)) best = std::max(best, e);
    if (!(best > 0.0)) throw DomainError("snap_to_panel_edge: R below the first panel edge");
    return best;
}

BallCharge ball_integral_charge(const KernelSpec& spec, const Charge& charge, double p1, double R,
                                int k) {
    if (k != 1 && k != 2) throw DomainError("ball_integral_charge: k must be 1 or 2");
    const RadialGrid& g = charge.g();
    BallCharge out;
    out.r_snapped = snap_to_panel_edge(g, R);
    double sum = 0.0;
    for (int j = 0; j < g.size(); ++j) {
        const double rj = g.nodes[j];
        if (rj > out.r_snapped) break;
        const double ker =
            (k == 1) ? kernel_T(spec, p1, rj) : -0.5 * kernel_W(spec, p1, rj);
        sum += g.weights[j] * ker * charge.values[j];
    }
    out.value = sum;
    return out;
}

}  // namespace tms21

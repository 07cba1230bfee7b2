#include "tms21/legendre.hpp"

#include <cmath>
#include <string>

#include "tms21/errors.hpp"

namespace tms21 {

namespace {

// Recurrence is stable below this point; above it the descending series
// converges in < 50 terms and avoids the P-solution contamination.
constexpr double kSeriesSwitch = 1.6;

void check_order(int ell) {
    if (ell < 0 || ell > kMaxLegendreOrder)
        throw DomainError("legendre: order " + std::to_string(ell) + " out of range [0, 8]");
}

// 2^ell (ell!)^2 / (2 ell + 1)!
double series_coeff(int ell) {
    double num = std::pow(2.0, ell);
    for (int k = 2; k <= ell; ++k) num *= double(k) * double(k);
    double den = 1.0;
    for (int k = 2; k <= 2 * ell + 1; ++k) den *= double(k);
    return num / den;
}

// Q_ell(z) = c_ell z^-(ell+1) sum_j a_j x^j, x = 1/z^2, a_0 = 1,
// a_{j+1}/a_j = (ell+1+2j)(ell+2+2j) / ((2ell+3+2j)(2j+2)).
// The derivative series carries a factor -(ell+1+2j) per term.
double q_series(int ell, double z, bool deriv) {
    const double x = 1.0 / (z * z);
    double t = 1.0;  // a_j x^j
    double sum = deriv ? (ell + 1.0) : 1.0;
    for (int j = 0; j < 400; ++j) {
        t *= (ell + 1.0 + 2 * j) * (ell + 2.0 + 2 * j) / ((2.0 * ell + 3 + 2 * j) * (2 * j + 2.0)) * x;
        const double inc = deriv ? t * (ell + 3.0 + 2 * j) : t;
        sum += inc;
        if (std::abs(inc) < 1e-18 * std::abs(sum)) break;
    }
    const double c = series_coeff(ell);
    if (deriv) return -c * sum * std::pow(z, -(ell + 2.0));
    return c * sum * std::pow(z, -(ell + 1.0));
}

double q_recurrence(int ell, double z) {
    const double q0 = 0.5 * std::log((z + 1.0) / (z - 1.0));
    if (ell == 0) return q0;
    double qm = q0;
    double q = z * q0 - 1.0;
    for (int l = 1; l < ell; ++l) {
        const double qp = ((2.0 * l + 1.0) * z * q - l * qm) / (l + 1.0);
        qm = q;
        q = qp;
    }
    return q;
}

}  // namespace

double legendre_P(int ell, double y) {
    check_order(ell);
    if (ell == 0) return 1.0;
    double pm = 1.0, p = y;
    for (int l = 1; l < ell; ++l) {
        const double pp = ((2.0 * l + 1.0) * y * p - l * pm) / (l + 1.0);
        pm = p;
        p = pp;
    }
    return p;
}

double legendre_Q(int ell, double z) {
    check_order(ell);
    if (!(z > 1.0)) throw DomainError("legendre_Q: z must be > 1, got " + std::to_string(z));
    if (z <= kSeriesSwitch) return q_recurrence(ell, z);
    return q_series(ell, z, /*deriv=*/false);
}

double legendre_Q_deriv(int ell, double z) {
    check_order(ell);
    if (!(z > 1.0)) throw DomainError("legendre_Q_deriv: z must be > 1, got " + std::to_string(z));
    if (ell == 0) return -1.0 / (z * z - 1.0);
    if (z > kSeriesSwitch) return q_series(ell, z, /*deriv=*/true);
    // (z^2 - 1) Q_ell' = ell (z Q_ell - Q_{ell-1})
    const double q = q_recurrence(ell, z);
    const double qm = q_recurrence(ell - 1, z);
    return ell * (z * q - qm) / (z * z - 1.0);
}

}  // namespace tms21

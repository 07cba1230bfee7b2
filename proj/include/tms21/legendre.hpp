#pragma once

namespace tms21 {

inline constexpr int kMaxLegendreOrder = 8;

/// Legendre polynomial P_ell(y), ell <= 8, y in [-1, 1].
double legendre_P(int ell, double y);

/// Legendre function of the second kind Q_ell(z) for z > 1, ell <= 8.
///
/// Closed forms for ell <= 1, upward recurrence for moderate z, and the
/// descending 1/z^2 series for large z where the recurrence loses digits
/// against the growing P-solution.
double legendre_Q(int ell, double z);

/// dQ_ell/dz for z > 1, ell <= 8.
double legendre_Q_deriv(int ell, double z);

}  // namespace tms21

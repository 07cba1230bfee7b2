#pragma once

#include "tms21/grid.hpp"
#include "tms21/params.hpp"

namespace tms21 {

/// Sector parameters entering the radial kernels.
struct KernelSpec {
    int ell = 0;
    double lambda = 1.0;
    double mu = 1.0;   // in (0, 2)
    double nu = 0.75;  // in (0, 1)
    double alpha = 0.0;

    static KernelSpec from_params(const ModelParams& p, int ell) {
        return KernelSpec{ell, p.lambda, p.mu, p.nu, p.alpha};
    }
};

/// int_{-1}^{1} P_ell(y) / (A + B y) dy  =  (-1)^ell (2/B) Q_ell(A/B),
/// with the descending series below B/A = 1e-3 (and the exact B = 0 limit).
double legendre_fraction_integral(int ell, double A, double B);

/// int_{-1}^{1} P_ell(y) / (A + B y)^2 dy  =  (-1)^{ell+1} (2/B^2) Q_ell'(A/B).
double legendre_fraction_integral_sq(int ell, double A, double B);

/// Radial kernel of the integral part of T_lambda^(ell):
///   kernel_T(r, r') = 2 pi r'^2 (-1)^ell (2/B) Q_ell(A/B),
/// A = r^2 + r'^2 + lambda, B = mu r r'. The r'^2 factor is carried by the
/// kernel; quadrature weights supply plain dr'.
double kernel_T(const KernelSpec& spec, double r, double r_prime);

/// Radial kernel of the integral part of W_lambda^(ell):
///   kernel_W(r, r') = -2 * 2 pi r'^2 (-1)^{ell+1} (2/B^2) Q_ell'(A/B),
/// i.e. -2 times the squared-denominator reduction.
double kernel_W(const KernelSpec& spec, double r, double r_prime);

/// Multiplicative parts: diag_T = 2 pi^2 sqrt(nu r^2 + lambda) + alpha,
/// diag_W = 2 pi^2 / sqrt(nu r^2 + lambda).
double diag_T(const KernelSpec& spec, double r);
double diag_W(const KernelSpec& spec, double r);

/// Charge-independent truncated ball integral
///   U_k(p, R) = int_{|q| < R} dq / (p^2 + q^2 + mu p . q + lambda)^k,
/// k in {1, 2}. U_1 grows like 4 pi R; U_2 converges as R -> inf.
double ball_integral_free(const KernelSpec& spec, double p1, double R, int k);

/// Charge part of the truncated ball integral, reduced to the radial
/// quadrature of kernel_T (k = 1) or -kernel_W/2 (k = 2) over grid panels
/// up to the snapped edge. Returns the value and the snapped radius.
struct BallCharge {
    double value = 0.0;
    double r_snapped = 0.0;
};
BallCharge ball_integral_charge(const KernelSpec& spec, const Charge& charge, double p1, double R,
                                int k);

/// Largest panel edge <= R. Throws when the grid does not cover (0, R].
double snap_to_panel_edge(const RadialGrid& g, double R);

}  // namespace tms21

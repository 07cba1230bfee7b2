#pragma once

#include <vector>

#include "tms21/grid.hpp"
#include "tms21/kernels.hpp"

namespace tms21 {

/// Charge pair (xi, eta) entering the adjoint-domain decomposition
/// g = u_eta / D + u_xi; the H^2_0 component f is identically zero here.
struct GSpec {
    Charge xi;
    Charge eta;
};

/// <u_xi, u_eta> for real charges in the same sector, by the (r1, r2, y)
/// reduction: a diagonal term with the free squared-denominator integral
/// J2(r) evaluated by quadrature, plus the P_ell cross term. Both charges
/// may carry tail annotations.
double u_pair(const Charge& xi, const Charge& eta, const KernelSpec& spec);

/// ||u_xi||^2 = u_pair(xi, xi).
double u_norm_sq(const Charge& xi, const KernelSpec& spec);

/// J2(r) = int_{R^3} dq / (r^2 + q^2 + mu r.q + lambda)^2 by quadrature;
/// equals pi^2 / sqrt(nu r^2 + lambda) analytically (tested, not assumed).
double free_squared_integral(const KernelSpec& spec, double r);

/// Radial value of int_{|p2|<R} g(p1, p2) dp2 / Y_ell,n(Omega_p1) at fixed
/// |p1| = p1, truncated at the snapped panel edge. Grows like
/// 4 pi xi(p1) R with the constant part -T xi + (1/2) W eta.
struct PartialIntegral {
    double value = 0.0;
    double r_snapped = 0.0;
};
PartialIntegral partial_integral(const GSpec& g, const KernelSpec& spec, double p1, double R);

/// Linear fit value(R) ~ intercept + slope R + c / R over the snapped R
/// list; the 1/R basis removes the leading finite-R drift (the integrand's
/// own tail), and the max residual reports the model adequacy.
struct TmsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    std::vector<double> r_used;
};
TmsFit extract_tms(const GSpec& g, const KernelSpec& spec, double p1,
                   const std::vector<double>& r_list);

/// eta solving the discretized (1/2) W eta = (T + alpha) xi; requires a
/// regular charge (tail exponent > 2 when annotated).
Charge tms_pair(const Charge& xi, const KernelSpec& spec);

}  // namespace tms21

#pragma once

#include <array>
#include <complex>

#include "tms21/grid.hpp"
#include "tms21/kernels.hpp"

namespace tms21 {

/// Extension parameters of the ell = 1 family: one extended real beta_n per
/// magnetic number n (infinity marks the Friedrichs direction) and the
/// singular-charge coefficients q_n. beta_n = inf forces q_n = 0.
struct BetaParams {
    std::array<double, 3> beta{0.0, 0.0, 0.0};  // index n + 1
    std::array<std::complex<double>, 3> q{};

    static constexpr double friedrichs = std::numeric_limits<double>::infinity();
};

void validate(const BetaParams& bp);

/// Shared radial profile of the singular charges Xi_{1,n}, renormalized to
/// ||Xi||_W^2 = 2. The three n-components share it by angular degeneracy.
struct SingularBasis {
    Charge radial;               // sector (1, 0) representative
    double normalization = 2.0;  // stored ||Xi||^2_{W_lambda}
};

/// Basis from the near-null singular vector of the discretized T + alpha
/// (the numerical stand-in for the conjectured kernel functions).
SingularBasis make_singular_basis(const KernelSpec& spec, std::shared_ptr<const RadialGrid> grid);

/// Basis from an analytic profile r (lambda + r^2)^{-(3-s)/2} with the
/// conjectured tail exponent 2 - s; pointwise evaluable, which the
/// Monte-Carlo cross-checks need.
SingularBasis make_singular_basis_profile(const KernelSpec& spec,
                                          std::shared_ptr<const RadialGrid> grid, double s);

/// Friedrichs form value 2 <xi, (T + alpha) xi>; requires a regular charge
/// (tail exponent > 1 when annotated).
double friedrichs_form(const Charge& xi, const KernelSpec& spec);

/// Quadratic form of the beta-extension:
/// friedrichs_form(xi_reg) + sum_n beta_n |q_n|^2 ||Xi||_W^2.
double beta_form(const Charge& xi_reg, const BetaParams& bp, const SingularBasis& basis,
                 const KernelSpec& spec);

/// The less-regular component xi_2^(beta) = (A^F)^{-1} sum_n beta_n q_n Xi_n:
/// a shared radial solve of (T + alpha) x = (1/2) W Xi plus per-n coefficients.
struct BetaCharge {
    Charge unit;                                 // radial solve for a unit Xi
    std::array<std::complex<double>, 3> coeff{};  // beta_n q_n
};
BetaCharge solve_regular_from_singular(const BetaParams& bp, const SingularBasis& basis,
                                       const KernelSpec& spec);

/// Which reading of the three-body boundary condition to check.
/// ProportionalToQ: 2 <Xi_n, (T+alpha) xi_reg,n> = beta_n q_n ||Xi||_W^2.
/// PrintedSquared:   <Xi_n, (T+alpha) xi_reg,n> = beta_n |q_n|^2.
/// The two agree for real q_n in {0, 1} under the ||Xi||^2 = 2 normalization.
enum class Bc2Convention { ProportionalToQ, PrintedSquared };

/// |LHS - RHS| per n for the boundary condition, xi_reg,n = coeff_n * unit.
std::array<double, 3> check_bc2(const BetaCharge& xi_reg, const BetaParams& bp,
                                const SingularBasis& basis, const KernelSpec& spec,
                                Bc2Convention convention = Bc2Convention::ProportionalToQ);

/// Antisymmetrized separable state F(p1,p2) = phi(p1) psi(p2) - phi(p2) psi(p1)
/// built from two radial-sector profiles on the same grid.
/// Supported sector pairs: identical sectors with odd ell (vanishing cross
/// term) and phi in (0,0) with psi in any (ell, n).
struct SeparableState {
    Charge phi;
    Charge psi;
};

struct SeparableMoments {
    double norm_f_sq = 0.0;   // ||F||^2
    double h_free = 0.0;      // free-form value on F
    double cross_xi = 0.0;    // <F, u_{xi}> for a given real xi (set by caller)
};

/// ||F||^2 and H_free[F] from 1D radial moments.
SeparableMoments separable_moments(const SeparableState& F, const KernelSpec& spec);

/// <F, u_f> for a real radial charge f in psi's sector (0 for unsupported
/// pairings by parity).
double separable_cross(const SeparableState& F, const Charge& f, const KernelSpec& spec);

/// Quadratic form of H_alpha^[beta] on F + u_xi with
/// xi = xi_reg + sum_n q_n Xi_n (xi_reg in sector (1, n0)):
///   -lambda (2 Re<F, u_xi> + ||u_xi||^2) + H_free[F]
///   + friedrichs_form(xi_reg) + sum_n beta_n |q_n|^2 ||Xi||_W^2.
double h_form_separable(const SeparableState& F, const Charge& xi_reg, const BetaParams& bp,
                        const SingularBasis& basis, const KernelSpec& spec);

}  // namespace tms21

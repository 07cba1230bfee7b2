#pragma once

#include <Eigen/Core>

#include "tms21/grid.hpp"
#include "tms21/kernels.hpp"

namespace tms21 {

enum class OperatorKind { TplusAlpha, W };

/// Dense Nystrom discretization of a sector operator on a radial grid:
///   (M f)_i = diag(r_i) f_i + sum_j w_j kernel(r_i, r_j) f_j.
/// The matrix acts on radial samples; the grid's measure tag fixes the
/// weighted geometry used for norms and singular values.
struct SectorOperator {
    Eigen::MatrixXd matrix;
    std::shared_ptr<const RadialGrid> grid;
    OperatorKind kind = OperatorKind::TplusAlpha;
    KernelSpec spec;

    const RadialGrid& g() const { return *grid; }
};

SectorOperator assemble(const KernelSpec& spec, std::shared_ptr<const RadialGrid> grid,
                        OperatorKind kind);

/// D^{1/2} M D^{-1/2} with D = diag(w_i r_i^2): both T and W are symmetric
/// against the L2 radial pairing, so this conjugation symmetrizes exactly
/// (up to roundoff) independently of the grid's measure tag.
Eigen::MatrixXd symmetrized(const SectorOperator& op);

/// D_out^{1/2} M D_in^{-1/2} with Sobolev weights (1+r^2)^{s} r^2 w:
/// the matrix whose plain singular values are the discrete operator
/// norms H^{2 s_in} -> H^{2 s_out} (s given as the Sobolev order itself).
Eigen::MatrixXd sobolev_weighted(const SectorOperator& op, double sobolev_out, double sobolev_in);

/// <xi, (T + alpha) xi> in the L2 radial pairing (measure r^2 dr).
/// The Friedrichs form value is twice this.
double form_phi(const SectorOperator& t_op, const Charge& xi);

/// W_lambda-twisted inner product <xi, W eta>.
double w_inner(const SectorOperator& w_op, const Charge& xi, const Charge& eta);

/// Bottom of the extension parameter: minimal generalized Rayleigh quotient
/// of 2 (T + alpha) against W. Strictly positive for alpha >= 0, lambda > 0,
/// m > m*; `positive` flags the sign.
struct BottomResult {
    double value = 0.0;
    bool positive = false;
};
BottomResult bottom(const KernelSpec& spec, std::shared_ptr<const RadialGrid> grid);

/// min over the discrete space of <xi, T xi> / int sqrt(nu r^2 + lambda) |xi|^2 r^2 dr
/// minus 2 pi^2 (1 - Lambda(m)); alpha is ignored (the bound is for T alone).
/// Must be >= -1e-6 (discretization slack) for m > m*.
double positivity_margin(const KernelSpec& spec, double m, std::shared_ptr<const RadialGrid> grid);

/// Discrete operator norm of T + alpha from H^{-1/2} to H^{-3/2}
/// (largest singular value in those weights).
double mapping_norm_minus_half(const SectorOperator& t_op);

}  // namespace tms21

#pragma once

#include <memory>

#include "tms21/grid.hpp"

namespace tms21 {

/// Weighted kernel of the H^{-1/2} -> H^{-3/2} boundedness proof:
///   K^(ell)(r, r') = (r r')^{ell+1} (1+r'^2)^{1/4}
///                    / ((1+r^2)^{3/4} (r^2+r'^2+1)^{ell+1}).
double schur_kernel(int ell, double r, double r_prime);

/// Row/column integral suprema of the Schur kernel over the grid nodes,
/// tail-extended beyond r_max. Both integrals increase monotonically to a
/// finite limit as r -> infinity, so the grid supremum sits at the top of
/// the node range; finiteness and refinement stability are the content of
/// the bounds.
struct SchurReport {
    int ell = 0;
    double sup_row = 0.0;
    double sup_col = 0.0;
    double argmax_r = 0.0;       // node attaining the row supremum
    double argmax_r_col = 0.0;   // node attaining the column supremum
    double refinement_delta = 0.0;  // relative change of sup_row under panel doubling
};

SchurReport schur_bounds(int ell, std::shared_ptr<const RadialGrid> grid);

/// Row integral int_0^inf K^(ell)(r, .) dr' (grid + analytic tail); exposed
/// for oracle comparison.
double schur_row_integral(int ell, double r, const RadialGrid& grid);

}  // namespace tms21

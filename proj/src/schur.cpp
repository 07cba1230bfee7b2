#include "tms21/schur.hpp"

#include <cmath>

#include "tms21/errors.hpp"

namespace tms21 {

double schur_kernel(int ell, double r, double r_prime) {
    if (ell < 1) throw DomainError("schur_kernel: bounds hold for ell >= 1");
    const double rr = r * r, pp = r_prime * r_prime;
    return std::pow(r * r_prime, ell + 1.0) * std::pow(1.0 + pp, 0.25) /
           (std::pow(1.0 + rr, 0.75) * std::pow(rr + pp + 1.0, ell + 1.0));
}

double schur_row_integral(int ell, double r, const RadialGrid& g) {
    double sum = 0.0;
    for (int j = 0; j < g.size(); ++j)
        sum += g.weights[j] * schur_kernel(ell, r, g.nodes[j]);
    // integrand ~ r'^{-(ell + 1/2)} for r' >> max(r, 1)
    sum += tail_integral([&](double rp) { return schur_kernel(ell, r, rp); }, g.r_max,
                         ell + 0.5);
    return sum;
}

namespace {

double schur_col_integral(int ell, double rp, const RadialGrid& g) {
    double sum = 0.0;
    for (int j = 0; j < g.size(); ++j)
        sum += g.weights[j] * schur_kernel(ell, g.nodes[j], rp);
    // integrand ~ r^{-(ell + 5/2)} for r >> max(r', 1)
    sum += tail_integral([&](double r) { return schur_kernel(ell, r, rp); }, g.r_max,
                         ell + 2.5);
    return sum;
}

SchurReport bounds_on(int ell, const RadialGrid& g) {
    SchurReport rep;
    rep.ell = ell;
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        const double row = schur_row_integral(ell, r, g);
        const double col = schur_col_integral(ell, r, g);
        if (row > rep.sup_row) {
            rep.sup_row = row;
            rep.argmax_r = r;
        }
        if (col > rep.sup_col) {
            rep.sup_col = col;
            rep.argmax_r_col = r;
        }
    }
    return rep;
}

}  // namespace

SchurReport schur_bounds(int ell, std::shared_ptr<const RadialGrid> grid) {
    if (ell < 1) throw DomainError("schur_bounds: ell >= 1");
    if (!grid) throw DomainError("schur_bounds: null grid");
    SchurReport rep = bounds_on(ell, *grid);
    const RadialGrid fine = build_grid(2 * grid->n_panels, grid->nodes_per_panel, grid->r_min,
                                       grid->r_max, grid->measure,
                                       grid->has_head ? HeadPanel::On : HeadPanel::Off);
    const SchurReport fine_rep = bounds_on(ell, fine);
    rep.refinement_delta = std::abs(fine_rep.sup_row - rep.sup_row) / fine_rep.sup_row;
    return rep;
}

}  // namespace tms21

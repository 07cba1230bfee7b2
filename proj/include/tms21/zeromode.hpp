#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tms21/grid.hpp"
#include "tms21/kernels.hpp"

namespace tms21 {

/// Mass ratio encoded in a KernelSpec (mu = 2/(m+1)).
inline double mass_of(const KernelSpec& spec) { return 2.0 / spec.mu - 1.0; }

/// One row of a mass sweep.
struct ScanRecord {
    double m = 0.0;
    int ell = 0;
    double sigma_min = 0.0;
    double sigma_2 = 0.0;
    std::optional<double> tail_exponent_fit;
    double tail_fit_r2 = 0.0;
    std::optional<double> s_of_m;
    std::string grid_id;
    double r_max = 0.0;
};

struct SingularResult {
    double sigma_min = 0.0;
    double sigma_2 = 0.0;  // second smallest, exposes possible higher multiplicity
    Charge vector;         // right-singular vector, H^{-1/2}-normalized
};

/// Smallest singular value of the discretized T + alpha, measured from the
/// H^{-1/2} input geometry into the H^{-3/2} output geometry, i.e. of
/// D_out^{1/2} M D_in^{-1/2} with D_in the H^{-1/2} and D_out the H^{-3/2}
/// measure weights. The kernel condition (T + alpha) Xi = 0 holds as an
/// identity in H^{-3/2}, so that is where the residual is measured; with
/// the output measured in H^{-1/2} instead, the quantity stays pinned at
/// the diagonal scale 2 pi^2 sqrt(lambda) and carries no kernel signal.
SingularResult smallest_singular(const KernelSpec& spec, std::shared_ptr<const RadialGrid> grid);

/// Least-squares slope of log|f| against log r over [r_lo, r_hi].
/// Requires the range inside the grid, spanning >= 2 decades with >= 10 nodes.
struct TailFit {
    double exponent = 0.0;
    double r2 = 0.0;
};
TailFit fit_tail(const Charge& vector, double r_lo, double r_hi);

/// One record per mass; deterministic for a fixed grid.
std::vector<ScanRecord> scan_mass(int ell, const std::vector<double>& m_values, double lambda,
                                  double alpha, std::shared_ptr<const RadialGrid> grid);

/// Default 21 log-spaced scan masses in [0.075, 0.2].
std::vector<double> default_scan_masses();

/// Radial profile 1_{r >= 1} r^{-(2-s)} with its tail annotation.
/// s in (0, 1); s >= 1/2 is L2-divergent and allowed only on H^{-1/2} grids.
Charge minlos_kernel_function(int n, double s, std::shared_ptr<const RadialGrid> grid);

/// pi sqrt(nu) 1_{p >= K} + int_{K/p}^inf r^s G1(r; mu) dr: the bracket of
/// (T^(1)_{lambda=0} Xi)(p) = 2 pi |p|^{s-1} Y_1n(Omega) * bracket for the
/// cutoff power-law charge. Tends to C(s, m) as K -> 0 and vanishes at
/// s = s(m) for every p in that limit.
double cancellation_coefficient(double s, double m, double K, double p);

/// Numerical check of the lambda = 0 kernel functions: applies the
/// assembled T^(1)_{lambda=0} (tail-extended) to the Minlos profile and
/// reports the H^{-3/2} residual over the window [100, r_max] relative to
/// the multiplicative part alone, together with the agreement between the
/// assembled route and the semi-analytic reduction.
struct MinlosResidual {
    double m = 0.0;
    double ratio = 0.0;            // |T Xi| / |diag part| on the window
    double route_agreement = 0.0;  // assembled vs semi-analytic, relative
};
MinlosResidual minlos_apply_residual(double s, std::shared_ptr<const RadialGrid> grid);

}  // namespace tms21

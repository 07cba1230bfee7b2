#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tms21 {

/// Weighted inner product a radial grid represents.
/// WLambda is a tag only: that geometry is realized through the assembled
/// W matrix, never through a pointwise weight.
enum class Measure { L2, Hminus12, Hplus12, WLambda };

std::string to_string(Measure m);

/// Pointwise radial weight of the measure: L2 -> r^2,
/// Hminus12 -> r^2 (1+r^2)^{-1/2}, Hplus12 -> r^2 (1+r^2)^{1/2}.
/// Throws DomainError for WLambda.
double measure_weight(Measure m, double r);

/// Whether the grid closes the gap (0, r_min] with an extra Gauss panel.
/// Auto adds the panel only when r_min is small enough to be a truncation
/// artifact rather than a deliberate domain boundary.
enum class HeadPanel { Auto, On, Off };

/// Quadrature nodes and weights for integrals over (0, r_max] against dr.
/// Panels are geometric on [r_min, r_max]; nodes never touch panel edges.
struct RadialGrid {
    Eigen::VectorXd nodes;
    Eigen::VectorXd weights;
    std::vector<double> panel_edges;  // ascending; first edge is 0 when the head panel is present
    Measure measure = Measure::L2;
    double r_min = 0.0;
    double r_max = 0.0;
    int n_panels = 0;
    int nodes_per_panel = 0;
    bool has_head = false;

    int size() const { return static_cast<int>(nodes.size()); }

    /// Pointwise measure weight at node i.
    double measure_at(int i) const;

    /// Short identifier embedding the construction parameters.
    std::string id() const;
};

RadialGrid build_grid(int n_panels, int nodes_per_panel, double r_min, double r_max,
                      Measure measure, HeadPanel head = HeadPanel::Auto);

/// The default working grid: 48 geometric panels x 12 Gauss nodes on
/// [1e-4, 1e4] plus the head panel, resolving the lambda scale and the
/// power-law tails over eight decades.
RadialGrid default_grid(Measure measure);

/// Sum_i w_i f_i.
double grid_integrate(const RadialGrid& g, const Eigen::VectorXd& f_samples);

/// Power-law tail annotation: f(r) ~ coefficient * r^{-exponent} beyond r_max.
struct Tail {
    double exponent = 0.0;
    double coefficient = 0.0;
};

/// Radial function in the angular sector (ell, n), sampled on a grid.
struct Charge {
    int ell = 0;
    int n = 0;
    Eigen::VectorXd values;
    std::optional<Tail> tail;
    std::shared_ptr<const RadialGrid> grid;

    const RadialGrid& g() const { return *grid; }
};

Charge make_charge(std::shared_ptr<const RadialGrid> grid, int ell, int n,
                   Eigen::VectorXd values, std::optional<Tail> tail = std::nullopt);

/// Samples a radial profile onto the grid.
Charge sample_charge(std::shared_ptr<const RadialGrid> grid, int ell, int n,
                     const std::function<double(double)>& profile,
                     std::optional<Tail> tail = std::nullopt);

/// int |f|^2 dmu over (0, inf) in the given measure, tail-extended.
/// Returns +inf when the declared tail makes the norm divergent.
double charge_norm_sq(const Charge& c, Measure measure);

/// Tail integral helper: int_{r_start}^{inf} g(r) dr for g that decays at
/// least like r^{-decay_exponent} (used to bound the analytic remainder).
/// Evaluates extension panels over `decades` decades and closes with the
/// leading power-law remainder.
double tail_integral(const std::function<double(double)>& g, double r_start,
                     double decay_exponent, int decades = 6, int panels_per_decade = 8,
                     int nodes_per_panel = 12);

}  // namespace tms21

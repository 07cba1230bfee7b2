#include "tms21/grid.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "tms21/errors.hpp"
#include "tms21/quadrature.hpp"

namespace tms21 {

std::string to_string(Measure m) {
    switch (m) {
        case Measure::L2: return "L2";
        case Measure::Hminus12: return "Hm12";
        case Measure::Hplus12: return "Hp12";
        case Measure::WLambda: return "WLam";
    }
    return "?";
}

double measure_weight(Measure m, double r) {
    switch (m) {
        case Measure::L2: return r * r;
        case Measure::Hminus12: return r * r / std::sqrt(1.0 + r * r);
        case Measure::Hplus12: return r * r * std::sqrt(1.0 + r * r);
        case Measure::WLambda:
            throw DomainError("measure_weight: WLambda has no pointwise weight; use w_inner");
    }
    throw DomainError("measure_weight: bad measure");
}

double RadialGrid::measure_at(int i) const { return measure_weight(measure, nodes[i]); }

std::string RadialGrid::id() const {
    std::ostringstream os;
    os << "g" << n_panels << "x" << nodes_per_panel << "_rmin" << r_min << "_rmax" << r_max
       << (has_head ? "_head" : "") << "_" << to_string(measure);
    return os.str();
}

RadialGrid build_grid(int n_panels, int nodes_per_panel, double r_min, double r_max,
                      Measure measure, HeadPanel head) {
    if (!(r_min > 0.0) || !(r_max > r_min))
        throw DomainError("build_grid: need 0 < r_min < r_max");
    if (n_panels < 1 || nodes_per_panel < 1)
        throw DomainError("build_grid: need n_panels >= 1 and nodes_per_panel >= 1");

    RadialGrid g;
    g.measure = measure;
    g.r_min = r_min;
    g.r_max = r_max;
    g.n_panels = n_panels;
    g.nodes_per_panel = nodes_per_panel;
    g.has_head = head == HeadPanel::On || (head == HeadPanel::Auto && r_min <= 1e-2);

    g.panel_edges = geometric_edges(r_min, r_max, n_panels);
    if (g.has_head) g.panel_edges.insert(g.panel_edges.begin(), 0.0);

    const GaussRule rule = gauss_legendre(nodes_per_panel);
    const int total = static_cast<int>(g.panel_edges.size() - 1) * nodes_per_panel;
    g.nodes.resize(total);
    g.weights.resize(total);
    int k = 0;
    for (std::size_t p = 0; p + 1 < g.panel_edges.size(); ++p) {
        const double a = g.panel_edges[p], b = g.panel_edges[p + 1];
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        for (int i = 0; i < nodes_per_panel; ++i, ++k) {
            g.nodes[k] = c + h * rule.x[i];
            g.weights[k] = h * rule.w[i];
        }
    }
    return g;
}

RadialGrid default_grid(Measure measure) {
    return build_grid(48, 12, 1e-4, 1e4, measure, HeadPanel::On);
}

double grid_integrate(const RadialGrid& g, const Eigen::VectorXd& f_samples) {
    if (f_samples.size() != g.nodes.size())
        throw DomainError("grid_integrate: sample count does not match grid");
    return g.weights.dot(f_samples);
}

namespace {

// Minimal tail exponent for a finite weighted norm: the measure behaves
// like r^w at infinity (w = 2 for L2, 1 for H^{-1/2}, 3 for H^{+1/2});
// int r^w r^{-2a} dr converges iff 2a > w + 1.
double measure_infinity_power(Measure m) {
    switch (m) {
        case Measure::L2: return 2.0;
        case Measure::Hminus12: return 1.0;
        case Measure::Hplus12: return 3.0;
        case Measure::WLambda:
            throw DomainError("charge norms in the WLambda geometry go through w_inner");
    }
    throw DomainError("bad measure");
}

}  // namespace

Charge make_charge(std::shared_ptr<const RadialGrid> grid, int ell, int n,
                   Eigen::VectorXd values, std::optional<Tail> tail) {
    if (!grid) throw DomainError("make_charge: null grid");
    if (ell < 0 || std::abs(n) > ell) throw DomainError("make_charge: need ell >= 0 and |n| <= ell");
    if (values.size() != grid->nodes.size())
        throw DomainError("make_charge: values not aligned with grid");
    if (!values.allFinite()) throw DomainError("make_charge: non-finite values");
    Charge c;
    c.ell = ell;
    c.n = n;
    c.values = std::move(values);
    c.tail = tail;
    c.grid = std::move(grid);
    return c;
}

Charge sample_charge(std::shared_ptr<const RadialGrid> grid, int ell, int n,
                     const std::function<double(double)>& profile, std::optional<Tail> tail) {
    if (!grid) throw DomainError("sample_charge: null grid");
    Eigen::VectorXd v(grid->nodes.size());
    for (int i = 0; i < v.size(); ++i) v[i] = profile(grid->nodes[i]);
    return make_charge(std::move(grid), ell, n, std::move(v), tail);
}

double charge_norm_sq(const Charge& c, Measure measure) {
    const RadialGrid& g = c.g();
    double sum = 0.0;
    for (int i = 0; i < g.size(); ++i)
        sum += g.weights[i] * measure_weight(measure, g.nodes[i]) * c.values[i] * c.values[i];
    if (c.tail) {
        const double a = c.tail->exponent;
        const double w = measure_infinity_power(measure);
        if (2.0 * a <= w + 1.0) return std::numeric_limits<double>::infinity();
        const double coef2 = c.tail->coefficient * c.tail->coefficient;
        sum += tail_integral(
            [&](double r) {
                return coef2 * std::pow(r, -2.0 * a) * measure_weight(measure, r);
            },
            g.r_max, 2.0 * a - w);
    }
    return sum;
}

double tail_integral(const std::function<double(double)>& g, double r_start,
                     double decay_exponent, int decades, int panels_per_decade,
                     int nodes_per_panel) {
    if (!(r_start > 0.0)) throw DomainError("tail_integral: need r_start > 0");
    if (!(decay_exponent > 1.0))
        throw DomainError("tail_integral: integrand must decay faster than 1/r");
    const double r_end = r_start * std::pow(10.0, decades);
    const double body = integrate_panels(
        g, geometric_edges(r_start, r_end, panels_per_decade * decades), nodes_per_panel);
    // close with the leading power-law remainder fitted at r_end
    const double rem = g(r_end) * r_end / (decay_exponent - 1.0);
    return body + rem;
}

}  // namespace tms21

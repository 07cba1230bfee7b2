#pragma once

#include <functional>
#include <vector>

namespace tms21 {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};

/// n-point Gauss-Legendre rule (Newton iteration on P_n), n >= 1.
GaussRule gauss_legendre(int n);

/// Composite Gauss integration over consecutive panels [edges[i], edges[i+1]].
double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, int nodes_per_panel);

/// Geometric panel edges a * (b/a)^(i/n), requires 0 < a < b.
std::vector<double> geometric_edges(double a, double b, int n_panels);

/// Composite Gauss panels with doubling until |I_2n - I_n| <= rel_tol |I_2n|.
/// Panels are geometric when a > 0 and b/a > 10, uniform otherwise.
/// Throws NumericError (carrying the last estimate) if doubling stalls.
double integrate_doubling(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int initial_panels = 8, int max_doublings = 12);

}  // namespace tms21

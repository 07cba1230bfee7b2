#include "tms21/quadrature.hpp"

#include <cmath>
#include <string>

#include "tms21/errors.hpp"

namespace tms21 {

GaussRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: need n >= 1");
    GaussRule rule;
    rule.x.resize(n);
    rule.w.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            // P_n(x) and P_n'(x) by recurrence
            double pm = 1.0, p = x;
            for (int l = 1; l < n; ++l) {
                const double pp = ((2.0 * l + 1.0) * x * p - l * pm) / (l + 1.0);
                pm = p;
                p = pp;
            }
            dp = n * (x * p - pm) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing step
                pm = 1.0;
                p = x;
                for (int l = 1; l < n; ++l) {
                    const double pp = ((2.0 * l + 1.0) * x * p - l * pm) / (l + 1.0);
                    pm = p;
                    p = pp;
                }
                dp = n * (x * p - pm) / (x * x - 1.0);
                x -= p / dp;
                break;
            }
        }
        rule.x[i] = -x;
        rule.x[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.w[i] = w;
        rule.w[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.x[n / 2] = 0.0;
    return rule;
}

double integrate_panels(const std::function<double(double)>& f,
                        const std::vector<double>& edges, int nodes_per_panel) {
    const GaussRule rule = gauss_legendre(nodes_per_panel);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < edges.size(); ++k) {
        const double a = edges[k], b = edges[k + 1];
        const double c = 0.5 * (a + b), h = 0.5 * (b - a);
        double panel = 0.0;
        for (int i = 0; i < nodes_per_panel; ++i) panel += rule.w[i] * f(c + h * rule.x[i]);
        sum += h * panel;
    }
    return sum;
}

std::vector<double> geometric_edges(double a, double b, int n_panels) {
    if (!(a > 0.0) || !(b > a) || n_panels < 1)
        throw DomainError("geometric_edges: need 0 < a < b and n_panels >= 1");
    std::vector<double> edges(n_panels + 1);
    const double ratio = std::log(b / a);
    for (int i = 0; i <= n_panels; ++i) edges[i] = a * std::exp(ratio * i / n_panels);
    edges.front() = a;
    edges.back() = b;
    return edges;
}

double integrate_doubling(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, int initial_panels, int max_doublings) {
    if (!(b > a)) throw DomainError("integrate_doubling: need b > a");
    const bool geometric = a > 0.0 && b / a > 10.0;
    auto edges_for = [&](int n) {
        if (geometric) return geometric_edges(a, b, n);
        std::vector<double> e(n + 1);
        for (int i = 0; i <= n; ++i) e[i] = a + (b - a) * i / n;
        return e;
    };
    int n = initial_panels;
    double prev = integrate_panels(f, edges_for(n), 12);
    for (int d = 0; d < max_doublings; ++d) {
        n *= 2;
        const double cur = integrate_panels(f, edges_for(n), 12);
        const double scale = std::max(std::abs(cur), 1e-300);
        if (std::abs(cur - prev) <= rel_tol * scale) return cur;
        prev = cur;
    }
    throw NumericError("integrate_doubling: tolerance " + std::to_string(rel_tol) +
                           " not reached on [" + std::to_string(a) + ", " + std::to_string(b) + "]",
                       prev);
}

}  // namespace tms21

#include "tms21/asymptotics.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>

#include "tms21/errors.hpp"
#include "tms21/operators.hpp"
#include "tms21/quadrature.hpp"

namespace tms21 {

namespace {

void check_pair(const Charge& a, const Charge& b) {
    if (a.grid.get() != b.grid.get()) throw DomainError("charges on different grids");
    if (a.ell != b.ell || a.n != b.n) throw DomainError("charges in different sectors");
}

int nearest_node(const RadialGrid& g, double r) {
    int best = 0;
    double dist = std::abs(g.nodes[0] - r);
    for (int i = 1; i < g.size(); ++i) {
        const double d = std::abs(g.nodes[i] - r);
        if (d < dist) {
            dist = d;
            best = i;
        }
    }
    return best;
}

// Integral part of W applied to a (possibly tail-annotated) charge at radius r.
double kernel_w_apply(const KernelSpec& spec, const Charge& eta, double r) {
    const RadialGrid& g = eta.g();
    double sum = 0.0;
    for (int j = 0; j < g.size(); ++j)
        sum += g.weights[j] * kernel_W(spec, r, g.nodes[j]) * eta.values[j];
    if (eta.tail) {
        const Tail t = *eta.tail;
        sum += tail_integral(
            [&](double rp) { return kernel_W(spec, r, rp) * t.coefficient * std::pow(rp, -t.exponent); },
            g.r_max, t.exponent + 2.0);
    }
    return sum;
}

double tail_value(const Charge& c, double r) {
    return c.tail ? c.tail->coefficient * std::pow(r, -c.tail->exponent) : 0.0;
}

}  // namespace

double free_squared_integral(const KernelSpec& spec, double r) {
    const double r_big = std::max({1e6, 100.0 * r, 100.0 * std::sqrt(spec.lambda + 1.0)});
    auto f = [&](double q) {
        const double A = r * r + q * q + spec.lambda;
        const double B = spec.mu * r * q;
        return q * q * 2.0 / (A * A - B * B);
    };
    double v = integrate_doubling(f, 0.0, 1e-3, 1e-10, 4);
    v += integrate_doubling(f, 1e-3, r_big, 1e-10, 16);
    return 2.0 * M_PI * v + 4.0 * M_PI / r_big;
}

double u_pair(const Charge& xi, const Charge& eta, const KernelSpec& spec) {
    check_pair(xi, eta);
    if (xi.ell != spec.ell) throw DomainError("u_pair: charge/spec sector mismatch");
    const RadialGrid& g = xi.g();

    // diagonal term: 2 int r^2 xi eta J2(r) dr
    double diag = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        diag += g.weights[i] * r * r * xi.values[i] * eta.values[i] * free_squared_integral(spec, r);
    }
    if (xi.tail && eta.tail) {
        const double k = xi.tail->exponent + eta.tail->exponent - 1.0;
        diag += tail_integral(
            [&](double r) {
                return r * r * tail_value(xi, r) * tail_value(eta, r) *
                       free_squared_integral(spec, r);
            },
            g.r_max, k);
    }
    diag *= 2.0;

    // cross term: + int r^2 xi (K_W eta) dr  (K_W is the kernel part of W)
    double cross = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        cross += g.weights[i] * r * r * xi.values[i] * kernel_w_apply(spec, eta, r);
    }
    if (xi.tail) {
        cross += tail_integral(
            [&](double r) { return r * r * tail_value(xi, r) * kernel_w_apply(spec, eta, r); },
            g.r_max, xi.tail->exponent + 2.0);
    }
    return diag + cross;
}

double u_norm_sq(const Charge& xi, const KernelSpec& spec) { return u_pair(xi, xi, spec); }

PartialIntegral partial_integral(const GSpec& g, const KernelSpec& spec, double p1, double R) {
    check_pair(g.xi, g.eta);
    if (g.xi.tail && g.xi.tail->exponent <= 0.55)
        throw DomainError("partial_integral: T xi requires tail exponent > 1/2 + 0.05");
    const RadialGrid& grid = g.xi.g();
    const int ip = nearest_node(grid, p1);
    const double p = grid.nodes[ip];

    PartialIntegral out;
    const BallCharge v1 = ball_integral_charge(spec, g.xi, p, R, 1);
    const BallCharge v2 = ball_integral_charge(spec, g.eta, p, R, 2);
    out.r_snapped = v1.r_snapped;
    const double u1 = ball_integral_free(spec, p, out.r_snapped, 1);
    const double u2 = ball_integral_free(spec, p, out.r_snapped, 2);
    out.value = g.xi.values[ip] * u1 - v1.value + g.eta.values[ip] * u2 - v2.value;
    return out;
}

TmsFit extract_tms(const GSpec& g, const KernelSpec& spec, double p1,
                   const std::vector<double>& r_list) {
    if (r_list.size() < 4) throw DomainError("extract_tms: need at least 4 R values");
    std::map<double, double> by_radius;  // snapped radius -> value
    for (double R : r_list) {
        const PartialIntegral pi = partial_integral(g, spec, p1, R);
        by_radius[pi.r_snapped] = pi.value;
    }
    if (by_radius.size() < 4)
        throw DomainError("extract_tms: R values collapse after panel snapping");
    std::vector<double> rs;
    std::vector<double> values;
    for (const auto& [r, v] : by_radius) {
        rs.push_back(r);
        values.push_back(v);
    }
    if (rs.back() / rs.front() < 10.0)
        throw DomainError("extract_tms: R list must span at least one decade");

    const int n = static_cast<int>(rs.size());
    Eigen::MatrixXd A(n, 3);
    Eigen::VectorXd y(n);
    for (int i = 0; i < n; ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = rs[i];
        A(i, 2) = 1.0 / rs[i];
        y[i] = values[i];
    }
    const Eigen::Vector3d coef = A.colPivHouseholderQr().solve(y);
    TmsFit fit;
    fit.intercept = coef[0];
    fit.slope = coef[1];
    fit.max_residual = (A * coef - y).cwiseAbs().maxCoeff();
    fit.r_used = rs;
    return fit;
}

Charge tms_pair(const Charge& xi, const KernelSpec& spec) {
    if (xi.tail && xi.tail->exponent <= 2.0)
        throw DomainError("tms_pair: regular class requires tail exponent > 2");
    if (xi.ell != spec.ell) throw DomainError("tms_pair: charge/spec sector mismatch");
    const SectorOperator t = assemble(spec, xi.grid, OperatorKind::TplusAlpha);
    const SectorOperator w = assemble(spec, xi.grid, OperatorKind::W);
    const Eigen::VectorXd rhs = 2.0 * (t.matrix * xi.values);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(w.matrix);
    Eigen::VectorXd eta = lu.solve(rhs);
    const double resid = (w.matrix * eta - rhs).norm() / std::max(rhs.norm(), 1e-300);
    if (!(resid < 1e-10)) throw NumericError("tms_pair: linear solve residual too large", resid);
    return make_charge(xi.grid, xi.ell, xi.n, std::move(eta));
}

}  // namespace tms21

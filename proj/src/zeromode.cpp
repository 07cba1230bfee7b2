#include "tms21/zeromode.hpp"

#include <Eigen/SVD>
#include <cmath>

#include "tms21/errors.hpp"
#include "tms21/operators.hpp"
#include "tms21/params.hpp"

namespace tms21 {

SingularResult smallest_singular(const KernelSpec& spec,
                                 std::shared_ptr<const RadialGrid> grid) {
    if (!grid) throw DomainError("smallest_singular: null grid");
    if (grid->measure != Measure::Hminus12)
        throw DomainError("smallest_singular: grid must carry the Hminus12 measure");
    const double m = mass_of(spec);
    if (!(efimov_lambda(m) < 1.0))
        throw DomainError("smallest_singular: need m > m*");

    const SectorOperator t = assemble(spec, grid, OperatorKind::TplusAlpha);
    const Eigen::MatrixXd S = sobolev_weighted(t, -1.5, -0.5);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(S, Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success) throw NumericError("smallest_singular: SVD failed");
    const auto& sv = svd.singularValues();
    const int n = static_cast<int>(sv.size());

    SingularResult res;
    res.sigma_min = sv(n - 1);
    res.sigma_2 = sv(n - 2);
    // map the right-singular vector back to radial samples; it is then
    // normalized in the discrete H^{-1/2} norm by construction
    Eigen::VectorXd v = svd.matrixV().col(n - 1);
    Eigen::VectorXd f(n);
    for (int i = 0; i < n; ++i) {
        const double din = grid->weights[i] * measure_weight(Measure::Hminus12, grid->nodes[i]);
        f[i] = v[i] / std::sqrt(din);
    }
    res.vector = make_charge(grid, spec.ell, 0, std::move(f));
    return res;
}

TailFit fit_tail(const Charge& vector, double r_lo, double r_hi) {
    const RadialGrid& g = vector.g();
    if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw DomainError("fit_tail: bad range");
    if (r_lo < g.nodes[0] || r_hi > g.r_max) throw DomainError("fit_tail: range outside grid");
    if (r_hi / r_lo < 100.0 * (1.0 - 1e-12))
        throw DomainError("fit_tail: range must span at least two decades");
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    int count = 0;
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        if (r < r_lo || r > r_hi) continue;
        const double a = std::abs(vector.values[i]);
        if (a <= 0.0) throw DomainError("fit_tail: vector vanishes on the fit range");
        const double x = std::log(r), y = std::log(a);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        syy += y * y;
        ++count;
    }
    if (count < 10) throw DomainError("fit_tail: fewer than 10 nodes in range");
    const double det = count * sxx - sx * sx;
    TailFit fit;
    fit.exponent = (count * sxy - sx * sy) / det;
    const double intercept = (sy - fit.exponent * sx) / count;
    const double ss_tot = syy - sy * sy / count;
    double ss_res = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        if (r < r_lo || r > r_hi) continue;
        const double e = std::log(std::abs(vector.values[i])) -
                         (intercept + fit.exponent * std::log(r));
        ss_res += e * e;
    }
    fit.r2 = (ss_tot > 0.0) ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

std::vector<ScanRecord> scan_mass(int ell, const std::vector<double>& m_values, double lambda,
                                  double alpha, std::shared_ptr<const RadialGrid> grid) {
    std::vector<ScanRecord> records;
    records.reserve(m_values.size());
    for (double m : m_values) {
        const ModelParams p = derive_params(m, lambda, alpha);
        const KernelSpec spec = KernelSpec::from_params(p, ell);
        const SingularResult sing = smallest_singular(spec, grid);
        ScanRecord rec;
        rec.m = m;
        rec.ell = ell;
        rec.sigma_min = sing.sigma_min;
        rec.sigma_2 = sing.sigma_2;
        rec.grid_id = grid->id();
        rec.r_max = grid->r_max;
        const double fit_lo = std::max(10.0, 100.0 * grid->r_min);
        const double fit_hi = grid->r_max / 10.0;
        if (fit_hi / fit_lo >= 100.0) {
            try {
                const TailFit fit = fit_tail(sing.vector, fit_lo, fit_hi);
                rec.tail_exponent_fit = fit.exponent;
                rec.tail_fit_r2 = fit.r2;
            } catch (const DomainError&) {
            }
        }
        try {
            rec.s_of_m = solve_s_of_m(m);
        } catch (const DomainError&) {
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<double> default_scan_masses() {
    std::vector<double> ms(21);
    const double lo = std::log(0.075), hi = std::log(0.2);
    for (int i = 0; i < 21; ++i) ms[i] = std::exp(lo + (hi - lo) * i / 20.0);
    return ms;
}

Charge minlos_kernel_function(int n, double s, std::shared_ptr<const RadialGrid> grid) {
    if (!grid) throw DomainError("minlos_kernel_function: null grid");
    if (n < -1 || n > 1) throw DomainError("minlos_kernel_function: n in {-1, 0, 1}");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("minlos_kernel_function: need s in (0, 1)");
    if (s >= 0.5 && grid->measure != Measure::Hminus12)
        throw DomainError(
            "minlos_kernel_function: s >= 1/2 is L2-divergent, allowed only on Hminus12 grids");
    const double p = 2.0 - s;
    return sample_charge(
        grid, 1, n, [&](double r) { return r >= 1.0 ? std::pow(r, -p) : 0.0; },
        Tail{p, 1.0});
}

double cancellation_coefficient(double s, double m, double K, double p) {
    if (!(s > 0.0 && s < 1.0)) throw DomainError("cancellation_coefficient: need s in (0, 1)");
    if (!(p > 0.0)) throw DomainError("cancellation_coefficient: need p > 0");
    if (!(K >= 0.0)) throw DomainError("cancellation_coefficient: need K >= 0");
    const ModelParams par = derive_params(m, 1.0, 0.0);
    const double base = (p >= K) ? M_PI * std::sqrt(par.nu) : 0.0;
    return base + cancellation_r_integral(s, par.mu, K / p);
}

MinlosResidual minlos_apply_residual(double s, std::shared_ptr<const RadialGrid> grid) {
    MinlosResidual out;
    out.m = solve_m_of_s(s);
    ModelParams p = derive_params(out.m, 1.0, 0.0);
    p.lambda = 0.0;  // the lambda = 0 operator of the kernel statement
    KernelSpec spec{1, 0.0, p.mu, p.nu, 0.0};
    const Charge xi = minlos_kernel_function(0, s, grid);
    const RadialGrid& g = *grid;

    // route A: assembled matrix action plus the analytic power-law tail
    const SectorOperator t = assemble(spec, grid, OperatorKind::TplusAlpha);
    Eigen::VectorXd va = t.matrix * xi.values;
    for (int i = 0; i < g.size(); ++i) {
        const double ri = g.nodes[i];
        va[i] += tail_integral(
            [&](double rp) { return kernel_T(spec, ri, rp) * std::pow(rp, -(2.0 - s)); },
            g.r_max, 3.0 - s);
    }

    // route B: semi-analytic reduction through the cancellation coefficient
    Eigen::VectorXd vb(g.size()), diag_part(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        const double pref = 2.0 * M_PI * std::pow(r, s - 1.0);
        vb[i] = pref * cancellation_coefficient(s, out.m, 1.0, r);
        diag_part[i] = (r >= 1.0) ? pref * M_PI * std::sqrt(p.nu) : 0.0;
    }

    // H^{-3/2} norms over the large-momentum window [100, r_max]
    double nra = 0.0, nrb = 0.0, ndiag = 0.0, ndiff = 0.0;
    for (int i = 0; i < g.size(); ++i) {
        const double r = g.nodes[i];
        if (r < 100.0) continue;
        const double w = g.weights[i] * r * r * std::pow(1.0 + r * r, -1.5);
        nra += w * va[i] * va[i];
        nrb += w * vb[i] * vb[i];
        ndiag += w * diag_part[i] * diag_part[i];
        ndiff += w * (va[i] - vb[i]) * (va[i] - vb[i]);
    }
    out.ratio = std::sqrt(nra / ndiag);
    out.route_agreement = std::sqrt(ndiff / nrb);
    return out;
}

}  // namespace tms21

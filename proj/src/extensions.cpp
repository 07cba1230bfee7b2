#include "tms21/extensions.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "tms21/asymptotics.hpp"
#include "tms21/errors.hpp"
#include "tms21/operators.hpp"
#include "tms21/zeromode.hpp"

namespace tms21 {

namespace {

constexpr double kInvSqrt4Pi = 0.28209479177387814;  // 1/sqrt(4 pi) = Y_00

bool is_friedrichs(double beta) { return std::isinf(beta) && beta > 0.0; }

Charge with_n(const Charge& c, int n) {
    Charge out = c;
    out.n = n;
    return out;
}

Eigen::VectorXd l2_weights(const RadialGrid& g) {
    Eigen::VectorXd d(g.size());
    for (int i = 0; i < g.size(); ++i) d[i] = g.weights[i] * g.nodes[i] * g.nodes[i];
    return d;
}

// Integral (kernel) part of T^(ell) applied to grid samples, at every node.
Eigen::VectorXd kernel_t_apply(const KernelSpec& spec, const RadialGrid& g,
                               const Eigen::VectorXd& f) {
    Eigen::VectorXd out(g.size());
    for (int i = 0; i < g.size(); ++i) {
        double sum = 0.0;
        for (int j = 0; j < g.size(); ++j)
            sum += g.weights[j] * kernel_T(spec, g.nodes[i], g.nodes[j]) * f[j];
        out[i] = sum;
    }
    return out;
}

void require_same_grid(const Charge& a, const Charge& b, const char* who) {
    if (a.grid.get() != b.grid.get()) throw DomainError(std::string(who) + ": grid mismatch");
}

}  // namespace

void validate(const BetaParams& bp) {
    for (int k = 0; k < 3; ++k) {
        if (is_friedrichs(bp.beta[k]) && std::abs(bp.q[k]) != 0.0)
            throw DomainError("BetaParams: a Friedrichs direction (beta = inf) carries no charge");
        if (std::isnan(bp.beta[k])) throw DomainError("BetaParams: beta is NaN");
    }
}

SingularBasis make_singular_basis(const KernelSpec& spec,
                                  std::shared_ptr<const RadialGrid> grid) {
    if (spec.ell != 1) throw DomainError("make_singular_basis: the singular sector is ell = 1");
    const SingularResult sing = smallest_singular(spec, grid);
    const SectorOperator w = assemble(spec, grid, OperatorKind::W);
    Charge xi = sing.vector;
    const double w2 = w_inner(w, xi, xi);
    if (!(w2 > 0.0)) throw NumericError("make_singular_basis: W-norm not positive", w2);
    xi.values *= std::sqrt(2.0 / w2);
    SingularBasis basis;
    basis.radial = std::move(xi);
    basis.normalization = 2.0;
    return basis;
}

SingularBasis make_singular_basis_profile(const KernelSpec& spec,
                                          std::shared_ptr<const RadialGrid> grid, double s) {
    if (spec.ell != 1) throw DomainError("make_singular_basis_profile: ell = 1 only");
    if (!(s > 0.0 && s < 1.0)) throw DomainError("make_singular_basis_profile: s in (0, 1)");
    const double lam = spec.lambda;
    Charge xi = sample_charge(
        grid, 1, 0,
        [&](double r) { return r * std::pow(lam + r * r, -(3.0 - s) / 2.0); },
        Tail{2.0 - s, 1.0});
    const SectorOperator w = assemble(spec, grid, OperatorKind::W);
    const double w2 = w_inner(w, xi, xi);
    if (!(w2 > 0.0)) throw NumericError("make_singular_basis_profile: W-norm not positive", w2);
    const double scale = std::sqrt(2.0 / w2);
    xi.values *= scale;
    xi.tail->coefficient *= scale;
    SingularBasis basis;
    basis.radial = std::move(xi);
    basis.normalization = 2.0;
    return basis;
}

double friedrichs_form(const Charge& xi, const KernelSpec& spec) {
    if (xi.tail && xi.tail->exponent <= 1.0)
        throw DomainError("friedrichs_form: H^{1/2} membership requires tail exponent > 1");
    const SectorOperator t = assemble(spec, xi.grid, OperatorKind::TplusAlpha);
    return 2.0 * form_phi(t, xi);
}

double beta_form(const Charge& xi_reg, const BetaParams& bp, const SingularBasis& basis,
                 const KernelSpec& spec) {
    validate(bp);
    double value = friedrichs_form(xi_reg, spec);
    for (int k = 0; k < 3; ++k) {
        const double q2 = std::norm(bp.q[k]);
        if (q2 == 0.0) continue;  // includes every Friedrichs direction
        value += bp.beta[k] * q2 * basis.normalization;
    }
    return value;
}

BetaCharge solve_regular_from_singular(const BetaParams& bp, const SingularBasis& basis,
                                       const KernelSpec& spec) {
    validate(bp);
    const std::shared_ptr<const RadialGrid>& grid = basis.radial.grid;
    const SectorOperator t = assemble(spec, grid, OperatorKind::TplusAlpha);
    const SectorOperator w = assemble(spec, grid, OperatorKind::W);
    const Eigen::VectorXd rhs = 0.5 * (w.matrix * basis.radial.values);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(t.matrix);
    Eigen::VectorXd x = lu.solve(rhs);
    const double resid = (t.matrix * x - rhs).norm() / std::max(rhs.norm(), 1e-300);
    if (!(resid < 1e-10))
        throw NumericError("solve_regular_from_singular: linear solve residual too large", resid);
    BetaCharge out;
    out.unit = make_charge(grid, 1, 0, std::move(x));
    for (int k = 0; k < 3; ++k)
        out.coeff[k] = (std::abs(bp.q[k]) == 0.0) ? 0.0 : bp.beta[k] * bp.q[k];
    return out;
}

std::array<double, 3> check_bc2(const BetaCharge& xi_reg, const BetaParams& bp,
                                const SingularBasis& basis, const KernelSpec& spec,
                                Bc2Convention convention) {
    validate(bp);
    require_same_grid(xi_reg.unit, basis.radial, "check_bc2");
    const SectorOperator t = assemble(spec, xi_reg.unit.grid, OperatorKind::TplusAlpha);
    const Eigen::VectorXd d = l2_weights(*xi_reg.unit.grid);
    const double inner = basis.radial.values.dot(d.asDiagonal() * (t.matrix * xi_reg.unit.values));
    std::array<double, 3> residuals{};
    for (int k = 0; k < 3; ++k) {
        const std::complex<double> qk = bp.q[k];
        std::complex<double> lhs, rhs;
        if (convention == Bc2Convention::ProportionalToQ) {
            lhs = 2.0 * xi_reg.coeff[k] * inner;
            rhs = (std::abs(qk) == 0.0) ? 0.0 : bp.beta[k] * qk * basis.normalization;
        } else {
            lhs = xi_reg.coeff[k] * inner;
            rhs = (std::abs(qk) == 0.0) ? 0.0 : bp.beta[k] * std::norm(qk);
        }
        residuals[k] = std::abs(lhs - rhs);
    }
    return residuals;
}

SeparableMoments separable_moments(const SeparableState& F, const KernelSpec& spec) {
    require_same_grid(F.phi, F.psi, "separable_moments");
    const RadialGrid& g = F.phi.g();
    const Eigen::VectorXd& a = F.phi.values;
    const Eigen::VectorXd& b = F.psi.values;
    double na = 0, nb = 0, pa = 0, pb = 0, s_ab = 0, t_ab = 0, d_ab = 0;
    for (int i = 0; i < g.size(); ++i) {
        const double r2 = g.nodes[i] * g.nodes[i];
        const double w = g.weights[i];
        na += w * r2 * a[i] * a[i];
        nb += w * r2 * b[i] * b[i];
        pa += w * r2 * r2 * a[i] * a[i];
        pb += w * r2 * r2 * b[i] * b[i];
        s_ab += w * r2 * a[i] * b[i];
        t_ab += w * r2 * r2 * a[i] * b[i];
        d_ab += w * r2 * g.nodes[i] * a[i] * b[i];
    }
    const bool same_sector = F.phi.ell == F.psi.ell && F.phi.n == F.psi.n;
    const bool mixed = F.phi.ell == 0 && F.phi.n == 0;
    if (!same_sector && !mixed)
        throw DomainError("separable_moments: supported pairs are same-sector or phi in (0,0)");
    if (same_sector && F.phi.ell % 2 == 0 && F.phi.ell != 0)
        throw DomainError("separable_moments: same-sector even ell >= 2 not supported");

    SeparableMoments m;
    if (same_sector) {
        m.norm_f_sq = 2.0 * (na * nb - s_ab * s_ab);
        m.h_free = 2.0 * (pa * nb + na * pb) - 4.0 * t_ab * s_ab;
    } else {
        m.norm_f_sq = 2.0 * na * nb;
        m.h_free = 2.0 * (pa * nb + na * pb);
        if (F.psi.ell == 1) m.h_free -= (2.0 / 3.0) * spec.mu * d_ab * d_ab;
    }
    return m;
}

double separable_cross(const SeparableState& F, const Charge& f, const KernelSpec& spec) {
    require_same_grid(F.phi, F.psi, "separable_cross");
    require_same_grid(F.phi, f, "separable_cross");
    if (f.ell != F.psi.ell || f.n != F.psi.n)
        throw DomainError("separable_cross: charge must live in psi's sector");
    const bool same_sector = F.phi.ell == F.psi.ell && F.phi.n == F.psi.n;
    if (same_sector && F.phi.ell % 2 == 1) return 0.0;  // odd-parity triple product
    if (!(F.phi.ell == 0 && F.phi.n == 0))
        throw DomainError("separable_cross: supported pairs are odd same-sector or phi in (0,0)");

    const RadialGrid& g = F.phi.g();
    KernelSpec spec_psi = spec;
    spec_psi.ell = F.psi.ell;
    KernelSpec spec_0 = spec;
    spec_0.ell = 0;

    const Eigen::VectorXd kb = kernel_t_apply(spec_psi, g, F.psi.values);
    const Eigen::VectorXd bf = F.psi.values.cwiseProduct(f.values);
    const Eigen::VectorXd kbf = kernel_t_apply(spec_0, g, bf);
    double t1 = 0, t2 = 0;
    for (int i = 0; i < g.size(); ++i) {
        const double w = g.weights[i] * g.nodes[i] * g.nodes[i] * F.phi.values[i];
        t1 += w * f.values[i] * kb[i];
        t2 += w * kbf[i];
    }
    // f's tail never enters: the outer integrals are cut off by phi, and the
    // inner K^(0)(b f) integrand is cut off by psi
    return 2.0 * kInvSqrt4Pi * (t1 - t2);
}

double h_form_separable(const SeparableState& F, const Charge& xi_reg, const BetaParams& bp,
                        const SingularBasis& basis, const KernelSpec& spec) {
    validate(bp);
    if (spec.ell != 1) throw DomainError("h_form_separable: charge spec must be the ell = 1 sector");
    if (xi_reg.ell != 1 || basis.radial.ell != 1)
        throw DomainError("h_form_separable: xi_reg and basis live in ell = 1");
    require_same_grid(F.phi, xi_reg, "h_form_separable");
    require_same_grid(F.phi, basis.radial, "h_form_separable");

    // ||u_xi||^2 with xi = xi_reg + sum_n q_n Xi_n; sectors are W-orthogonal
    const int n0 = xi_reg.n;
    const double u_rr = u_pair(xi_reg, xi_reg, spec);
    const double u_rb = u_pair(xi_reg, with_n(basis.radial, n0), spec);
    const double u_bb = u_pair(basis.radial, basis.radial, spec);
    double q2_total = 0.0;
    for (const auto& qk : bp.q) q2_total += std::norm(qk);
    const std::complex<double> q_n0 = bp.q[n0 + 1];
    const double u_norm = u_rr + 2.0 * q_n0.real() * u_rb + q2_total * u_bb;

    // 2 Re <F, u_xi>: only the component in psi's sector couples
    double cross2 = 0.0;
    if (F.psi.ell == 1) {
        const int npsi = F.psi.n;
        if (npsi == n0) cross2 += 2.0 * separable_cross(F, with_n(xi_reg, npsi), spec);
        cross2 += 2.0 * bp.q[npsi + 1].real() * separable_cross(F, with_n(basis.radial, npsi), spec);
    }

    const SeparableMoments mom = separable_moments(F, spec);
    return -spec.lambda * (cross2 + u_norm) + mom.h_free +
           beta_form(xi_reg, bp, basis, spec);
}

}  // namespace tms21

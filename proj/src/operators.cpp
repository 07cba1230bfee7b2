#include "tms21/operators.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

#include "tms21/errors.hpp"
#include "tms21/params.hpp"

namespace tms21 {

namespace {

Eigen::VectorXd l2_weights(const RadialGrid& g) {
    Eigen::VectorXd d(g.size());
    for (int i = 0; i < g.size(); ++i) d[i] = g.weights[i] * g.nodes[i] * g.nodes[i];
    return d;
}

Eigen::VectorXd sobolev_weights(const RadialGrid& g, double s) {
    Eigen::VectorXd d(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const double r2 = g.nodes[i] * g.nodes[i];
        d[i] = g.weights[i] * r2 * std::pow(1.0 + r2, s);
    }
    return d;
}

void check_charge(const SectorOperator& op, const Charge& c) {
    if (c.grid.get() != op.grid.get())
        throw DomainError("operator/charge grid mismatch");
    if (c.ell != op.spec.ell) throw DomainError("operator/charge sector mismatch");
}

}  // namespace

SectorOperator assemble(const KernelSpec& spec, std::shared_ptr<const RadialGrid> grid,
                        OperatorKind kind) {
    if (!grid) throw DomainError("assemble: null grid");
    const RadialGrid& g = *grid;
    const int n = g.size();
    SectorOperator op;
    op.grid = grid;
    op.kind = kind;
    op.spec = spec;
    op.matrix.resize(n, n);
    for (int i = 0; i < n; ++i) {
        const double ri = g.nodes[i];
        for (int j = 0; j < n; ++j) {
            const double rj = g.nodes[j];
            const double ker = (kind == OperatorKind::TplusAlpha) ? kernel_T(spec, ri, rj)
                                                                  : kernel_W(spec, ri, rj);
            op.matrix(i, j) = g.weights[j] * ker;
        }
        op.matrix(i, i) +=
            (kind == OperatorKind::TplusAlpha) ? diag_T(spec, ri) : diag_W(spec, ri);
    }
    return op;
}

Eigen::MatrixXd symmetrized(const SectorOperator& op) {
    const Eigen::VectorXd d = l2_weights(op.g());
    const Eigen::VectorXd s = d.array().sqrt();
    return s.asDiagonal() * op.matrix * s.cwiseInverse().asDiagonal();
}

Eigen::MatrixXd sobolev_weighted(const SectorOperator& op, double sobolev_out,
                                 double sobolev_in) {
    const Eigen::VectorXd dout = sobolev_weights(op.g(), sobolev_out).array().sqrt();
    const Eigen::VectorXd din = sobolev_weights(op.g(), sobolev_in).array().sqrt();
    return dout.asDiagonal() * op.matrix * din.cwiseInverse().asDiagonal();
}

double form_phi(const SectorOperator& t_op, const Charge& xi) {
    if (t_op.kind != OperatorKind::TplusAlpha)
        throw DomainError("form_phi: operator must be T + alpha");
    check_charge(t_op, xi);
    const Eigen::VectorXd d = l2_weights(t_op.g());
    return xi.values.dot(d.asDiagonal() * (t_op.matrix * xi.values));
}

double w_inner(const SectorOperator& w_op, const Charge& xi, const Charge& eta) {
    if (w_op.kind != OperatorKind::W) throw DomainError("w_inner: operator must be W");
    check_charge(w_op, xi);
    check_charge(w_op, eta);
    const Eigen::VectorXd d = l2_weights(w_op.g());
    return xi.values.dot(d.asDiagonal() * (w_op.matrix * eta.values));
}

BottomResult bottom(const KernelSpec& spec, std::shared_ptr<const RadialGrid> grid) {
    const SectorOperator t = assemble(spec, grid, OperatorKind::TplusAlpha);
    const SectorOperator w = assemble(spec, grid, OperatorKind::W);
    const Eigen::VectorXd d = l2_weights(*grid);
    Eigen::MatrixXd A = d.asDiagonal() * (2.0 * t.matrix);
    Eigen::MatrixXd B = d.asDiagonal() * w.matrix;
    A = 0.5 * (A + A.transpose()).eval();
    B = 0.5 * (B + B.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(A, B,
                                                                     Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("bottom: generalized eigensolve failed");
    BottomResult res;
    res.value = solver.eigenvalues().minCoeff();
    res.positive = res.value > 0.0;
    return res;
}

double positivity_margin(const KernelSpec& spec, double m,
                         std::shared_ptr<const RadialGrid> grid) {
    KernelSpec pure = spec;
    pure.alpha = 0.0;  // the bound controls T alone
    const double lam_m = efimov_lambda(m);
    const SectorOperator t = assemble(pure, grid, OperatorKind::TplusAlpha);
    const Eigen::VectorXd d = l2_weights(*grid);
    Eigen::MatrixXd A = d.asDiagonal() * t.matrix;
    A = 0.5 * (A + A.transpose()).eval();
    Eigen::VectorXd s(grid->size());
    for (int i = 0; i < grid->size(); ++i)
        s[i] = d[i] * std::sqrt(pure.nu * grid->nodes[i] * grid->nodes[i] + pure.lambda);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        A, Eigen::MatrixXd(s.asDiagonal()), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw NumericError("positivity_margin: generalized eigensolve failed");
    return solver.eigenvalues().minCoeff() - 2.0 * M_PI * M_PI * (1.0 - lam_m);
}

double mapping_norm_minus_half(const SectorOperator& t_op) {
    const Eigen::MatrixXd A = sobolev_weighted(t_op, -1.5, -0.5);
    Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
    return svd.singularValues()(0);
}

}  // namespace tms21

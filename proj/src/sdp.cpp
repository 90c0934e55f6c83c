#include "gdw/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gdw/errors.hpp"

namespace gdw {

namespace {

double inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
    return a.cwiseProduct(b).sum();
}

// largest step t in (0, 1] keeping base + t * dir positive definite,
// found by Cholesky trial with geometric shrink, then damped away from
// the boundary
double psd_step(const Eigen::MatrixXd& base, const Eigen::MatrixXd& dir) {
    double t = 1.0;
    for (int k = 0; k < 80 && t >= 1e-12; k++) {
        Eigen::LLT<Eigen::MatrixXd> llt(base + t * dir);
        if (llt.info() == Eigen::Success) return 0.95 * t;
        t *= 0.8;
    }
    return 0.0;
}

} // namespace

SdpSolution sdp_solve(const SdpProblem& prob, const NumericConfig& cfg) {
    const int n = static_cast<int>(prob.C.rows());
    if (n < 1 || prob.C.cols() != n) throw std::invalid_argument("sdp: C must be square and non-empty");
    if (n > cfg.sdp_order_cap) {
        throw SolverError("sdp", "matrix order " + std::to_string(n) + " exceeds configured cap " +
                                     std::to_string(cfg.sdp_order_cap));
    }
    Eigen::MatrixXd C = 0.5 * (prob.C + prob.C.transpose());
    if ((C - prob.C).cwiseAbs().maxCoeff() > 1e-8 * (1.0 + C.cwiseAbs().maxCoeff()))
        throw std::invalid_argument("sdp: C is not symmetric");

    std::set<std::pair<int, int>> uniq;
    for (auto [i, j] : prob.zeros) {
        if (i < 0 || i >= n || j < 0 || j >= n) throw std::invalid_argument("sdp: mask index out of range");
        if (i == j) throw std::invalid_argument("sdp: mask entries must be off-diagonal");
        uniq.emplace(std::min(i, j), std::max(i, j));
    }
    const std::vector<std::pair<int, int>> mask(uniq.begin(), uniq.end());

    SdpSolution sol;
    if (n == 1) {
        sol.X = Eigen::MatrixXd::Constant(1, 1, 1.0);
        sol.value = C(0, 0);
        sol.dual_value = C(0, 0);
        return sol;
    }

    const int m = static_cast<int>(mask.size()) + 1; // mask constraints plus trace
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);

    Eigen::MatrixXd X = id / n;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ces(C, Eigen::EigenvaluesOnly);
    Eigen::VectorXd y = Eigen::VectorXd::Zero(m);
    y(m - 1) = ces.eigenvalues().maxCoeff() + 1.0;
    Eigen::MatrixXd Z = y(m - 1) * id - C;

    double phi_best = std::numeric_limits<double>::infinity();
    double psi_best = -std::numeric_limits<double>::infinity();
    Eigen::MatrixXd X_best = X;
    double ap = 1.0, ad = 1.0;
    bool converged = false;
    int iter = 0;

    while (true) {
        // score the iterate by its value after projection onto the exact
        // constraint set, so constraint drift can never inflate psi
        double psi = -std::numeric_limits<double>::infinity();
        {
            Eigen::MatrixXd P = X;
            for (const auto& [i, j] : mask) {
                P(i, j) = 0.0;
                P(j, i) = 0.0;
            }
            const double ptr = P.trace();
            if (ptr > 0.0) psi = inner(C, P) / ptr;
        }
        const double phi = y(m - 1); // only the trace constraint has a nonzero rhs
        phi_best = std::min(phi_best, phi);
        if (psi > psi_best) {
            psi_best = psi;
            X_best = X;
        }
        if (phi_best - psi_best <= cfg.sdp_gap_tol * std::max(1.0, std::abs(phi_best))) {
            converged = true;
            break;
        }
        if (iter >= cfg.sdp_max_iter) break;
        iter++;

        double mu = inner(Z, X) / (2.0 * n);
        if (ap + ad > 1.8) mu *= 0.5; // long steps: push the barrier down faster

        Eigen::LLT<Eigen::MatrixXd> zllt(Z);
        if (zllt.info() != Eigen::Success) break;
        Eigen::MatrixXd Zi = zllt.solve(id);
        Zi = 0.5 * (Zi + Zi.transpose()).eval(); // eval: transpose aliases Zi

        // Schur complement of the Newton system, one row per constraint
        Eigen::MatrixXd M(m, m);
        Eigen::VectorXd rhs(m);
        const Eigen::MatrixXd ZiX = Zi * X;
        for (int e = 0; e + 1 < m; e++) {
            const auto [i, j] = mask[e];
            for (int f = 0; f + 1 < m; f++) {
                const auto [k, l] = mask[f];
                M(e, f) = Zi(j, k) * X(i, l) + Zi(j, l) * X(i, k) + Zi(i, k) * X(j, l) + Zi(i, l) * X(j, k);
            }
            M(e, m - 1) = ZiX(i, j) + ZiX(j, i);
            M(m - 1, e) = M(e, m - 1);
            rhs(e) = mu * 2.0 * Zi(i, j);
        }
        M(m - 1, m - 1) = inner(Zi, X);
        rhs(m - 1) = mu * Zi.trace() - 1.0;

        Eigen::LDLT<Eigen::MatrixXd> mldlt(M);
        Eigen::VectorXd dy = mldlt.solve(rhs);
        if (mldlt.info() != Eigen::Success || !dy.allFinite()) {
            const Eigen::MatrixXd Mr = M + 1e-10 * Eigen::MatrixXd::Identity(m, m);
            dy = Eigen::PartialPivLU<Eigen::MatrixXd>(Mr).solve(rhs);
            if (!dy.allFinite()) break;
        }

        Eigen::MatrixXd dZ = dy(m - 1) * id;
        for (int e = 0; e + 1 < m; e++) {
            const auto [i, j] = mask[e];
            dZ(i, j) += dy(e);
            dZ(j, i) += dy(e);
        }
        Eigen::MatrixXd dX = mu * Zi - X - Zi * dZ * X;
        dX = 0.5 * (dX + dX.transpose()).eval(); // eval: transpose aliases dX

        ap = psd_step(X, dX);
        ad = psd_step(Z, dZ);
        if (ap <= 0.0 && ad <= 0.0) break;
        X += ap * dX;
        y += ad * dy;
        Z += ad * dZ;
    }

    // residuals are reported for the raw iterate, then X is projected onto
    // the exact constraint set so callers see masked zeros and unit trace
    Eigen::MatrixXd Xp = X_best;
    double mask_err = 0.0;
    for (const auto& [i, j] : mask) {
        mask_err = std::max({mask_err, std::abs(Xp(i, j)), std::abs(Xp(j, i))});
        Xp(i, j) = 0.0;
        Xp(j, i) = 0.0;
    }
    sol.mask_err = mask_err;
    sol.trace_err = std::abs(Xp.trace() - 1.0);
    Xp = 0.5 * (Xp + Xp.transpose()).eval();
    const double tr = Xp.trace();
    if (!(tr > 0.0) || !Xp.allFinite()) throw SolverError("sdp", "degenerate iterate: nonpositive trace");
    Xp /= tr;

    sol.status = converged ? SdpStatus::optimal : SdpStatus::max_iterations;
    sol.X = Xp;
    sol.value = inner(C, Xp);
    sol.dual_value = phi_best;
    sol.gap = phi_best - sol.value;
    sol.iterations = iter;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> xes(Xp, Eigen::EigenvaluesOnly);
    sol.min_eig = xes.eigenvalues().minCoeff();
    return sol;
}

} // namespace gdw

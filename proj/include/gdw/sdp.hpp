#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "gdw/numeric.hpp"

namespace gdw {

enum class SdpStatus { optimal, max_iterations };

// max <C, X>  subject to  trace X = 1,  X_ij = 0 for (i, j) in zeros,  X psd.
// C must be symmetric; zeros lists off-diagonal positions.
struct SdpProblem {
    Eigen::MatrixXd C;
    std::vector<std::pair<int, int>> zeros;
};

// X is returned projected onto the exact constraint set (masked entries
// zeroed, symmetrized, trace rescaled); value = <C, X> there. dual_value is
// an upper bound on the optimum up to solver accuracy.
struct SdpSolution {
    SdpStatus status = SdpStatus::optimal;
    double value = 0.0;
    double dual_value = 0.0;
    double gap = 0.0;
    Eigen::MatrixXd X;
    int iterations = 0;
    double min_eig = 0.0;
    double trace_err = 0.0;
    double mask_err = 0.0;
};

// Primal-dual interior-point method with a Schur-complement Newton system
// over the mask + trace constraints. Strictly feasible start X = I/n,
// Z = (lambda_max(C) + 1) I - C. Orders above cfg.sdp_order_cap throw
// SolverError("sdp", ...).
SdpSolution sdp_solve(const SdpProblem& prob, const NumericConfig& cfg = NumericConfig{});

} // namespace gdw

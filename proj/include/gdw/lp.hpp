#pragma once

#include <vector>

#include "gdw/numeric.hpp"

namespace gdw {

enum class LpStatus { optimal, infeasible, unbounded };
enum class Rel { le, eq, ge };
enum class Sense { minimize, maximize };

// min/max c.x  subject to  A x {<=,=,>=} b,  x >= 0.
struct LpProblem {
    Sense sense = Sense::maximize;
    std::vector<double> c;
    std::vector<std::vector<double>> A;
    std::vector<double> b;
    std::vector<Rel> rel;
};

// On optimal: x is primal-feasible, y are row multipliers with b.y = value.
// Sign convention: for maximize, y_i >= 0 on <= rows and y_i <= 0 on >= rows;
// for minimize the signs swap; = rows are unrestricted. Complementary
// slackness holds to lp_duality_tol.
struct LpSolution {
    LpStatus status = LpStatus::optimal;
    double value = 0.0;
    std::vector<double> x;
    std::vector<double> y;
    double max_violation = 0.0; // primal feasibility residual
    double duality_gap = 0.0;   // |c.x - b.y|
};

// Dense two-phase tableau simplex with Bland's rule (termination guaranteed).
// Infeasible and unbounded are reported as statuses, not errors; dimension
// mismatches throw, iteration-limit overruns throw SolverError("lp", ...).
LpSolution lp_solve(const LpProblem& prob, const NumericConfig& cfg = NumericConfig{});

} // namespace gdw

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "gdw/bitset.hpp"
#include "gdw/graph.hpp"
#include "gdw/numeric.hpp"

namespace gdw {

struct AlphaResult {
    double value = 0.0;
    VertexSet best_set;  // lexicographically smallest optimal independent set
    long long nodes = 0; // branch-and-bound tree size
};

struct AlphaStarResult {
    double value = 0.0;
    std::vector<double> q; // optimal fractional packing
    double duality_gap = 0.0;
};

struct ThetaResult {
    double value = 0.0;
    Eigen::MatrixXd X; // optimal matrix, masked entries exactly zero, trace one
    double gap = 0.0;
    int iterations = 0;
};

// Bounds on a quantity that is itself not exactly computable.
struct BoundInterval {
    double lower = 0.0;
    double upper = 0.0;
};

// Maximum total weight of an independent set, exact branch-and-bound with a
// greedy clique-cover bound. Ties resolved toward the lex-smallest set.
AlphaResult alpha(const Graph& g, const std::vector<double>& p);

// LP relaxation: max <p,q> subject to sum_{v in C} q_v <= 1 for every
// maximal clique C, q >= 0.
AlphaStarResult alpha_star(const Graph& g, const std::vector<double>& p,
                           const NumericConfig& cfg = NumericConfig{});

// SDP value: max <s s^T, X> over psd X with trace 1 and X_uv = 0 on edges,
// where s_v = sqrt(p_v). Returns 0 for p = 0.
ThetaResult lovasz_theta(const Graph& g, const std::vector<double>& p,
                         const NumericConfig& cfg = NumericConfig{});

// alpha of the k-th strong power with product weights, k-th root.
double capacity_lower_bound(const Graph& g, const std::vector<double>& p, int k,
                            const NumericConfig& cfg = NumericConfig{});

// lower = best power bound over k <= kmax, upper = lovasz_theta.
BoundInterval capacity_bounds(const Graph& g, const std::vector<double>& p, int kmax,
                              const NumericConfig& cfg = NumericConfig{});

// Interval for the transform of the complement's capacity at p: the
// transform reverses order, so the complement's upper bound function yields
// the lower end and vice versa.
BoundInterval dual_capacity_bounds(const Graph& g, const std::vector<double>& p, int kmax,
                                   const NumericConfig& cfg = NumericConfig{});

} // namespace gdw

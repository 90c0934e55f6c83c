#pragma once

#include <cstdint>

namespace gdw {

// Central numeric configuration. The defaults here are the ones every
// documented tolerance statement refers to; tests pin them.
struct NumericConfig {
    // linear programming
    double lp_pivot_eps = 1e-9;
    double lp_feas_tol = 1e-9;      // scaled by (1 + max|b|)
    double lp_duality_tol = 1e-8;   // |primal - dual| <= tol * (1 + |value|)
    long long lp_max_iter = 200000;

    // semidefinite programming
    double sdp_gap_tol = 1e-8;      // scaled by max(1, |dual objective|)
    double sdp_residual_tol = 1e-8;
    int sdp_max_iter = 200;
    int sdp_order_cap = 64;

    // transform evaluation
    double transform_tol = 1e-6;    // default relative accuracy target
    int multistart_random = 64;     // Dirichlet starts added to vertices + barycenter
    uint64_t seed = 0;

    // construction budgets
    long long vertex_budget = 4096;
    long long assignment_budget = 1000000; // deterministic-model search nodes
};

// Deterministic 64-bit generator (splitmix64); identical streams on every
// platform for a given seed, unlike the standard distributions.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // uniform in (0, 1)
    double uniform() { return (double(next() >> 11) + 0.5) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    int uniform_int(int lo, int hi) { // inclusive bounds
        return lo + int(next() % uint64_t(hi - lo + 1));
    }
};

} // namespace gdw

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gdw {

// Budget knobs for simplex_maximize. The defaults suit cheap objectives;
// callers wrapping expensive or noisy objectives (nested solves) should
// shrink the start list and iteration counts and raise grad_h above the
// noise floor of the objective.
struct SimplexMaxOptions {
    int random_starts = 64;   // Dirichlet(1) starts on top of vertices + barycenter
    int coarse_iters = 40;    // gradient-ascent budget spent on every start
    int refine_iters = 300;   // extra budget for the winning start
    int pairwise_sweeps = 2;  // golden-section passes over coordinate pairs
    double grad_h = 1e-6;     // finite-difference step
    double min_step = 1e-12;  // line-search floor
    double pairwise_tol = 1e-13;
    std::uint64_t seed = 0;
    std::vector<std::vector<double>> extra_starts; // warm starts, projected onto the simplex
    bool default_starts = true; // false: run from extra_starts only (barycenter if none given)
};

struct SimplexMaxResult {
    double value = 0.0;          // objective at argmax, from an actual evaluation
    std::vector<double> argmax;  // point on the simplex
    long long evaluations = 0;   // total objective calls, probes included
    int starts = 0;              // number of start points tried
    int best_start = 0;          // index of the start whose basin won
    double start_spread = 0.0;   // best minus worst value across starts after coarse ascent
};

// Maximizes f over the probability simplex {q >= 0, sum q = 1} by multistart
// projected gradient ascent plus pairwise golden-section polish. The result
// value is always the best actually-evaluated on-simplex point, hence a
// valid lower bound on the supremum. For quasi-concave objectives (any
// positive ratio of a linear form by a convex positive function) a single
// interior start already converges globally; multistart covers the rest.
// Deterministic for fixed options. NaN objective values are treated as
// minus infinity; if every evaluation is NaN an exception is thrown.
SimplexMaxResult simplex_maximize(int n, const std::function<double(const std::vector<double>&)>& f,
                                  const SimplexMaxOptions& opt = SimplexMaxOptions{});

// Euclidean projection onto the probability simplex.
std::vector<double> project_to_simplex(std::vector<double> v);

} // namespace gdw

#include "gdw/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdw/btransform.hpp"
#include "gdw/errors.hpp"
#include "gdw/lp.hpp"
#include "gdw/sdp.hpp"

namespace gdw {

namespace {

void check_weight_vector(const Graph& g, const std::vector<double>& p) {
    if (static_cast<int>(p.size()) != g.order())
        throw std::invalid_argument("weight vector length " + std::to_string(p.size()) +
                                    " does not match graph order " + std::to_string(g.order()));
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("weights must be finite and >= 0");
    }
}

struct AlphaSearch {
    const Graph& g;
    const std::vector<double>& p;
    double best_w = 0.0;
    VertexSet best_set;
    long long nodes = 0;

    // greedy clique cover of cand; each clique contributes its top weight
    double cover_bound(const VertexSet& cand) const {
        double bound = 0.0;
        VertexSet left = cand;
        for (int v = left.first(); v >= 0; v = left.first()) {
            VertexSet clique = VertexSet::of(g.order(), {});
            clique.set(v);
            double top = p[v];
            left.reset(v);
            for (int u = left.first(); u >= 0; u = left.next(u)) {
                if (clique.subset_of(g.neighbors(u))) {
                    clique.set(u);
                    top = std::max(top, p[u]);
                }
            }
            left = left.minus(clique);
            bound += top;
        }
        return bound;
    }

    void consider(const VertexSet& cur, double w) {
        if (w > best_w || (w == best_w && cur.lex_less(best_set))) {
            best_w = w;
            best_set = cur;
        }
    }

    void dfs(VertexSet cand, const VertexSet& cur, double w) {
        nodes++;
        const int v = cand.first();
        if (v < 0) {
            consider(cur, w);
            return;
        }
        if (w + cover_bound(cand) < best_w) return; // strictly worse, ties stay alive
        VertexSet in = cur;
        in.set(v);
        dfs(cand.minus(g.neighbors(v)).minus(VertexSet::of(g.order(), {v})), in, w + p[v]);
        cand.reset(v);
        dfs(cand, cur, w);
    }
};

} // namespace

AlphaResult alpha(const Graph& g, const std::vector<double>& p) {
    check_weight_vector(g, p);
    AlphaSearch s{g, p, 0.0, VertexSet(g.order()), 0};
    s.best_set = VertexSet(g.order());
    s.dfs(VertexSet::full(g.order()), VertexSet(g.order()), 0.0);
    return {s.best_w, s.best_set, s.nodes};
}

AlphaStarResult alpha_star(const Graph& g, const std::vector<double>& p, const NumericConfig& cfg) {
    check_weight_vector(g, p);
    const auto cliques = maximal_cliques(g);
    LpProblem lp;
    lp.sense = Sense::maximize;
    lp.c = p;
    for (const auto& c : cliques) {
        std::vector<double> row(g.order(), 0.0);
        for (int v = c.first(); v >= 0; v = c.next(v)) row[v] = 1.0;
        lp.A.push_back(std::move(row));
        lp.b.push_back(1.0);
        lp.rel.push_back(Rel::le);
    }
    const auto sol = lp_solve(lp, cfg);
    if (sol.status != LpStatus::optimal)
        throw SolverError("alpha-star", "packing LP did not reach an optimum");
    return {sol.value, sol.x, sol.duality_gap};
}

ThetaResult lovasz_theta(const Graph& g, const std::vector<double>& p, const NumericConfig& cfg) {
    check_weight_vector(g, p);
    const int n = g.order();
    bool all_zero = true;
    for (double v : p) {
        if (v > 0.0) all_zero = false;
    }
    if (all_zero) {
        ThetaResult r;
        r.X = Eigen::MatrixXd::Identity(n, n) / n;
        return r;
    }
    Eigen::VectorXd s(n);
    for (int v = 0; v < n; v++) s(v) = std::sqrt(p[v]);
    SdpProblem prob;
    prob.C = s * s.transpose();
    prob.zeros = g.edges();
    const auto sol = sdp_solve(prob, cfg);
    if (sol.status != SdpStatus::optimal)
        throw SolverError("theta", "no convergence after " + std::to_string(sol.iterations) +
                                       " iterations, gap " + std::to_string(sol.gap));
    ThetaResult r;
    r.value = std::max(0.0, sol.value);
    r.X = sol.X;
    r.gap = sol.gap;
    r.iterations = sol.iterations;
    return r;
}

double capacity_lower_bound(const Graph& g, const std::vector<double>& p, int k, const NumericConfig& cfg) {
    check_weight_vector(g, p);
    if (k < 1) throw std::invalid_argument("capacity level must be >= 1");
    const Graph gk = strong_power(g, k, cfg.vertex_budget);
    const int n = g.order();
    std::vector<double> pk(gk.order());
    for (int idx = 0; idx < gk.order(); idx++) {
        double w = 1.0;
        int rest = idx;
        for (int d = 0; d < k; d++) {
            w *= p[rest % n];
            rest /= n;
        }
        pk[idx] = w;
    }
    return std::pow(alpha(gk, pk).value, 1.0 / k);
}

BoundInterval capacity_bounds(const Graph& g, const std::vector<double>& p, int kmax, const NumericConfig& cfg) {
    if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
    double lower = 0.0;
    for (int k = 1; k <= kmax; k++) lower = std::max(lower, capacity_lower_bound(g, p, k, cfg));
    return {lower, lovasz_theta(g, p, cfg).value};
}

BoundInterval dual_capacity_bounds(const Graph& g, const std::vector<double>& p, int kmax, const NumericConfig& cfg) {
    check_weight_vector(g, p);
    if (kmax < 1) throw std::invalid_argument("kmax must be >= 1");
    const Graph gc = complement(g);
    // bound functions for the complement's capacity; order reversal swaps ends
    const FunctionHandle upper_fn = make_theta_handle(gc, cfg);
    const FunctionHandle lower_fn = make_capacity_level_handle(gc, kmax, cfg);
    const double lo = beval(upper_fn, p, cfg.transform_tol, cfg).value;
    const double hi = beval(lower_fn, p, cfg.transform_tol, cfg).value;
    return {lo, hi};
}

} // namespace gdw

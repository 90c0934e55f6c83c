#include "gdw/contextuality.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "gdw/errors.hpp"
#include "gdw/invariants.hpp"
#include "gdw/lp.hpp"

namespace gdw {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

} // namespace

ModelClass parse_model_class(const std::string& name) {
    if (name == "classical") return ModelClass::classical;
    if (name == "q") return ModelClass::q;
    if (name == "q1") return ModelClass::q1;
    if (name == "ce1") return ModelClass::ce1;
    throw std::invalid_argument("unknown model class \"" + name +
                                "\" (expected classical, q, q1, or ce1)");
}

void validate_model(const Hypergraph& h, const ProbModel& p) {
    if (static_cast<int>(p.size()) != h.order())
        throw std::invalid_argument("model length " + std::to_string(p.size()) +
                                    " does not match scenario order " +
                                    std::to_string(h.order()));
    for (int v = 0; v < h.order(); ++v)
        if (!std::isfinite(p[v]) || p[v] < 0.0 || p[v] > 1.0)
            throw ModelError(-1, p[v], "model entry at vertex " + std::to_string(v) +
                                           " is " + fmt(p[v]) + ", outside [0, 1]");
    for (size_t i = 0; i < h.edges().size(); ++i) {
        double s = 0.0;
        for (int v : h.edges()[i]) s += p[v];
        if (std::abs(s - 1.0) > 1e-9)
            throw ModelError(static_cast<int>(i), s,
                             "model edge " + std::to_string(i) + " sums to " + fmt(s) +
                                 ", expected 1");
    }
}

std::vector<ProbModel> deterministic_models(const Hypergraph& h) {
    const int n = h.order();
    const auto& edges = h.edges();
    std::vector<int> order(edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return edges[a].size() < edges[b].size();
    });

    std::vector<ProbModel> out;
    // 0 undecided, 1 in the support, -1 excluded
    std::vector<signed char> state(n, 0);
    long long nodes = 0;

    std::function<void(size_t)> walk = [&](size_t ei) {
        if (++nodes > 1000000)
            throw SolverError("deterministic-models", "assignment budget exceeded");
        if (ei == order.size()) {
            ProbModel m(n, 0.0);
            for (int v = 0; v < n; ++v)
                if (state[v] == 1) m[v] = 1.0;
            out.push_back(std::move(m));
            return;
        }
        const auto& e = edges[order[ei]];
        int hits = 0;
        for (int v : e)
            if (state[v] == 1) ++hits;
        if (hits > 1) return;
        if (hits == 1) {
            // the edge is already settled; everything undecided in it is out
            std::vector<int> flipped;
            for (int v : e)
                if (state[v] == 0) {
                    state[v] = -1;
                    flipped.push_back(v);
                }
            walk(ei + 1);
            for (int v : flipped) state[v] = 0;
            return;
        }
        for (size_t pick = 0; pick < e.size(); ++pick) {
            if (state[e[pick]] != 0) continue;
            std::vector<int> flipped;
            state[e[pick]] = 1;
            for (int v : e)
                if (state[v] == 0) {
                    state[v] = -1;
                    flipped.push_back(v);
                }
            walk(ei + 1);
            for (int v : flipped) state[v] = 0;
            state[e[pick]] = 0;
        }
    };
    walk(0);
    return out;
}

double dmax(const ProbModel& p, const ProbModel& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("model lengths differ: " + std::to_string(p.size()) +
                                    " vs " + std::to_string(q.size()));
    double factor = 1.0;
    for (size_t v = 0; v < p.size(); ++v) {
        if (p[v] <= 0.0) continue;
        if (q[v] <= 0.0) return kInf;
        factor = std::max(factor, p[v] / q[v]);
    }
    return std::log2(factor);
}

ClassicalCover classical_cover(const Hypergraph& h, const ProbModel& p,
                               const NumericConfig& cfg) {
    validate_model(h, p);
    const auto models = deterministic_models(h);
    ClassicalCover out;
    out.model_count = static_cast<int>(models.size());
    if (models.empty()) {
        out.infinite = true;
        return out;
    }
    const int n = h.order();
    const int k = out.model_count;

    LpProblem primal;
    primal.sense = Sense::minimize;
    primal.c.assign(k, 1.0);
    primal.A.assign(n, std::vector<double>(k, 0.0));
    primal.b = p;
    primal.rel.assign(n, Rel::ge);
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v) primal.A[v][i] = models[i][v];
    const LpSolution ps = lp_solve(primal, cfg);
    if (ps.status == LpStatus::infeasible) {
        out.infinite = true;
        return out;
    }
    if (ps.status != LpStatus::optimal)
        throw SolverError("lp", "cover program unbounded");

    LpProblem dual;
    dual.sense = Sense::maximize;
    dual.c = p;
    dual.A.assign(k, std::vector<double>(n, 0.0));
    dual.b.assign(k, 1.0);
    dual.rel.assign(k, Rel::le);
    for (int i = 0; i < k; ++i)
        for (int v = 0; v < n; ++v) dual.A[i][v] = models[i][v];
    const LpSolution ds = lp_solve(dual, cfg);
    if (ds.status != LpStatus::optimal)
        throw SolverError("lp", "cover dual did not reach an optimum");

    out.primal = ps.value;
    out.dual = ds.value;
    out.mix = ps.x;
    out.w = ds.x;
    if (std::abs(out.primal - out.dual) > 1e-7 * std::max(1.0, std::abs(out.primal)))
        throw SolverError("lp", "cover duality gap " + fmt(out.primal - out.dual) +
                                    " exceeds tolerance");
    return out;
}

double cmax_classical(const Hypergraph& h, const ProbModel& p, const NumericConfig& cfg) {
    const ClassicalCover cover = classical_cover(h, p, cfg);
    if (cover.infinite) return kInf;
    return std::log2(cover.primal);
}

double cmax_ce1(const Hypergraph& h, const ProbModel& p, const NumericConfig& cfg) {
    validate_model(h, p);
    const Graph no = no_graph(h);
    const auto stable = maximal_independent_sets(no);
    const int n = h.order();

    // columns r_0 .. r_{n-1}, t; minimize t with r >= p, every hyperedge of
    // r summing to exactly t, and every maximal independent set to at most t
    LpProblem lp;
    lp.sense = Sense::minimize;
    lp.c.assign(n + 1, 0.0);
    lp.c[n] = 1.0;
    for (int v = 0; v < n; ++v) {
        std::vector<double> row(n + 1, 0.0);
        row[v] = 1.0;
        lp.A.push_back(std::move(row));
        lp.b.push_back(p[v]);
        lp.rel.push_back(Rel::ge);
    }
    for (const auto& e : h.edges()) {
        std::vector<double> row(n + 1, 0.0);
        for (int v : e) row[v] = 1.0;
        row[n] = -1.0;
        lp.A.push_back(std::move(row));
        lp.b.push_back(0.0);
        lp.rel.push_back(Rel::eq);
    }
    for (const auto& s : stable) {
        std::vector<double> row(n + 1, 0.0);
        for (int v = s.first(); v >= 0; v = s.next(v)) row[v] = 1.0;
        row[n] = -1.0;
        lp.A.push_back(std::move(row));
        lp.b.push_back(0.0);
        lp.rel.push_back(Rel::le);
    }
    const LpSolution sol = lp_solve(lp, cfg);
    if (sol.status == LpStatus::infeasible) return kInf;
    if (sol.status != LpStatus::optimal)
        throw SolverError("lp", "exclusivity program unbounded");

    const double bits = std::log2(sol.value);
    const double direct = std::log2(alpha(no, p).value);
    if (std::abs(bits - direct) > 1e-6)
        throw SolverError("lp", "exclusivity optimum " + fmt(bits) +
                                    " bits disagrees with the independence number " +
                                    fmt(direct) + " bits");
    return bits;
}

double cmax_graph_rhs(const Hypergraph& h, const ProbModel& p, ModelClass which,
                      const NumericConfig& cfg) {
    validate_model(h, p);
    const Graph no = no_graph(h);
    double value = 0.0;
    switch (which) {
    case ModelClass::classical: value = alpha_star(no, p, cfg).value; break;
    case ModelClass::q:
    case ModelClass::q1: value = lovasz_theta(no, p, cfg).value; break;
    case ModelClass::ce1: value = alpha(no, p).value; break;
    }
    return std::log2(value);
}

double bell_bound(const Hypergraph& h, const std::vector<double>& w) {
    if (static_cast<int>(w.size()) != h.order())
        throw std::invalid_argument("weight length " + std::to_string(w.size()) +
                                    " does not match scenario order " +
                                    std::to_string(h.order()));
    for (double x : w)
        if (!std::isfinite(x) || x < 0.0)
            throw std::invalid_argument("bell weights must be finite and >= 0");
    const auto models = deterministic_models(h);
    if (models.empty()) throw SolverError("bell", "no classical models");
    double best = 0.0;
    for (const auto& m : models) best = std::max(best, dot(m, w));
    return best;
}

BellWitness bell_witness(const Hypergraph& h, const ProbModel& p, const NumericConfig& cfg) {
    const ClassicalCover cover = classical_cover(h, p, cfg);
    if (cover.model_count == 0) throw SolverError("bell", "no classical models");
    if (cover.infinite)
        throw SolverError("bell", "no finite cover of the model, witness unbounded");
    BellWitness out;
    out.w = cover.w;
    out.bound = bell_bound(h, out.w);
    if (out.bound <= 0.0) throw SolverError("bell", "degenerate witness, zero bound");
    out.ratio = dot(p, out.w) / out.bound;
    return out;
}

} // namespace gdw

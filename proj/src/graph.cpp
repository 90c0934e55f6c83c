#include "gdw/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdw/errors.hpp"

namespace gdw {

Graph::Graph(int n, std::vector<std::string> labels)
    : n_(n), adj_(n, VertexSet(n)), labels_(std::move(labels)) {
    if (n < 1) throw std::invalid_argument("Graph: order must be >= 1");
    if (!labels_.empty() && int(labels_.size()) != n)
        throw std::invalid_argument("Graph: label count does not match order");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("Graph: vertex out of range");
    if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::vector<std::string> labels) {
    Graph g(n, std::move(labels));
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: order must be >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

int Graph::edge_count() const {
    int deg = 0;
    for (int v = 0; v < n_; ++v) deg += degree(v);
    return deg / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

Graph complement(const Graph& g) {
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges, g.labels());
}

Graph strong_product(const Graph& g, const Graph& h) {
    int ng = g.order(), nh = h.order();
    long long n = (long long)ng * nh;
    if (n > (1 << 30)) throw std::invalid_argument("strong_product: result too large");
    std::vector<std::pair<int, int>> edges;
    for (int u1 = 0; u1 < ng; ++u1)
        for (int v1 = 0; v1 < nh; ++v1) {
            int a = u1 * nh + v1;
            for (int u2 = u1; u2 < ng; ++u2) {
                if (u2 != u1 && !g.has_edge(u1, u2)) continue;
                for (int v2 = 0; v2 < nh; ++v2) {
                    int b = u2 * nh + v2;
                    if (b <= a) continue;
                    bool vok = (v1 == v2) || h.has_edge(v1, v2);
                    if (!vok) continue;
                    edges.emplace_back(a, b);
                }
            }
        }
    return Graph::from_edges(int(n), edges);
}

Graph strong_power(const Graph& g, int k, long long vertex_budget) {
    if (k < 1) throw std::invalid_argument("strong_power: exponent must be >= 1");
    double requested = std::pow(double(g.order()), double(k));
    long long size = 1;
    for (int i = 0; i < k; ++i) {
        if (size > vertex_budget / g.order())
            throw BudgetError((long long)std::min(requested, 9e18), vertex_budget);
        size *= g.order();
    }
    if (size > vertex_budget) throw BudgetError(size, vertex_budget);
    Graph r = g;
    for (int i = 1; i < k; ++i) r = strong_product(r, g);
    return r;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet& R, VertexSet P, VertexSet X,
                   std::vector<VertexSet>& out) {
    if (P.none() && X.none()) {
        out.push_back(R);
        return;
    }
    // Tomita pivot: maximize |P & N(u)| over u in P | X
    int pivot = -1, best = -1;
    VertexSet PX = P | X;
    for (int u = PX.first(); u >= 0; u = PX.next(u)) {
        int c = (P & g.neighbors(u)).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    VertexSet cand = P.minus(g.neighbors(pivot));
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
        R.set(v);
        bron_kerbosch(g, R, P & g.neighbors(v), X & g.neighbors(v), out);
        R.reset(v);
        P.reset(v);
        X.set(v);
    }
}

} // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet R(g.order());
    bron_kerbosch(g, R, VertexSet::full(g.order()), VertexSet(g.order()), out);
    std::sort(out.begin(), out.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.lex_less(b); });
    return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return maximal_cliques(complement(g));
}

} // namespace gdw

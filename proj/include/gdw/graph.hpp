#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gdw/bitset.hpp"

namespace gdw {

// Finite simple graph: symmetric, loop-free adjacency over vertices 0..n-1.
// Immutable once constructed.
class Graph {
public:
    explicit Graph(int n, std::vector<std::string> labels = {});

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                            std::vector<std::string> labels = {});
    static Graph empty(int n) { return Graph(n); }
    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);

    int order() const { return n_; }
    int edge_count() const;
    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<VertexSet> adj_;
    std::vector<std::string> labels_;

    void add_edge(int u, int v);
};

Graph complement(const Graph& g);

// Strong product; vertex (u, v) of g * h maps to index u * h.order() + v.
Graph strong_product(const Graph& g, const Graph& h);

// k-fold strong product, k >= 1. Throws BudgetError when the result would
// have more than vertex_budget vertices.
Graph strong_power(const Graph& g, int k, long long vertex_budget);

// All maximal cliques, each reported once, sorted by lex_less.
std::vector<VertexSet> maximal_cliques(const Graph& g);
std::vector<VertexSet> maximal_independent_sets(const Graph& g);

} // namespace gdw

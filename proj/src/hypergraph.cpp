#include "gdw/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gdw {

Hypergraph::Hypergraph(int n, std::vector<std::vector<int>> edges)
    : n_(n), edges_(std::move(edges)) {
    if (n < 1) throw std::invalid_argument("Hypergraph: order must be >= 1");
    std::vector<char> covered(n, 0);
    for (size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty())
            throw std::invalid_argument("Hypergraph: edge " + std::to_string(i) + " is empty");
        std::sort(e.begin(), e.end());
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 0 || e[j] >= n)
                throw std::invalid_argument("Hypergraph: edge " + std::to_string(i) +
                                            " has vertex " + std::to_string(e[j]) +
                                            " out of range");
            if (j > 0 && e[j] == e[j - 1])
                throw std::invalid_argument("Hypergraph: edge " + std::to_string(i) +
                                            " repeats vertex " + std::to_string(e[j]));
            covered[e[j]] = 1;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!covered[v])
            throw std::invalid_argument("Hypergraph: vertex " + std::to_string(v) +
                                        " occurs in no edge");
}

Graph no_graph(const Hypergraph& h) {
    int n = h.order();
    // membership sets: which edges contain each vertex
    std::vector<VertexSet> member(n, VertexSet(int(h.edges().size())));
    for (size_t i = 0; i < h.edges().size(); ++i)
        for (int v : h.edges()[i]) member[v].set(int(i));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!member[u].intersects(member[v])) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

} // namespace gdw

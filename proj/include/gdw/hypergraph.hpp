#pragma once

#include <vector>

#include "gdw/graph.hpp"

namespace gdw {

// Measurement scenario: vertices 0..n-1 and a family of hyperedges.
// Every vertex must occur in at least one edge; edges keep input order,
// entries are stored sorted and must be distinct. Immutable.
class Hypergraph {
public:
    Hypergraph(int n, std::vector<std::vector<int>> edges);

    int order() const { return n_; }
    const std::vector<std::vector<int>>& edges() const { return edges_; }

private:
    int n_;
    std::vector<std::vector<int>> edges_;
};

// Non-orthogonality graph: u ~ v iff u != v and no hyperedge contains both.
Graph no_graph(const Hypergraph& h);

} // namespace gdw

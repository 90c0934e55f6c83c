#pragma once

#include <string>
#include <vector>

#include "gdw/errors.hpp"
#include "gdw/graph.hpp"
#include "gdw/hypergraph.hpp"

namespace gdw {

// Text graph format, one item per line:
//   c <comment>
//   p <n> <m>
//   e <u> <v>
// Vertices are 0-based by default, 1-based with one_based = true.
// Exactly m edge lines must follow the p line. Throws ParseError with the
// offending 1-based line number.
Graph parse_graph_text(const std::string& text, bool one_based = false);
std::string format_graph_text(const Graph& g);

// {"n": int, "edges": [[int, ...], ...]}
Hypergraph parse_hypergraph_json(const std::string& text);

// JSON array of n nonnegative reals.
std::vector<double> parse_weights_json(const std::string& text, int n);

// Weight source: "a,b,c" inline or "@path" pointing at a JSON array.
// Empty spec yields the all-ones vector.
std::vector<double> resolve_weights(const std::string& spec, int n);

std::string read_file(const std::string& path);

} // namespace gdw

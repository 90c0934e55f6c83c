#include "gdw/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gdw {

namespace {

void check_weights(const std::vector<double>& w) {
    for (size_t i = 0; i < w.size(); i++) {
        if (!std::isfinite(w[i]) || w[i] < 0.0)
            throw ParseError(0, "weights: entry " + std::to_string(i) + " must be finite and >= 0");
    }
}

} // namespace

Graph parse_graph_text(const std::string& text, bool one_based) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1, seen = 0;
    std::vector<std::pair<int, int>> edges;
    const int off = one_based ? 1 : 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            if (!(ls >> n >> m)) throw ParseError(lineno, "expected 'p <n> <m>'");
            if (n < 1) throw ParseError(lineno, "graph order must be >= 1");
            if (m < 0) throw ParseError(lineno, "negative edge count");
            continue;
        }
        if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge before problem line");
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            u -= off;
            v -= off;
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ParseError(lineno, "vertex out of range");
            if (u == v) throw ParseError(lineno, "loop edge rejected");
            ++seen;
            if (seen > m) throw ParseError(lineno, "more edge lines than declared");
            edges.emplace_back(u, v);
            continue;
        }
        throw ParseError(lineno, "unknown line tag '" + tag + "'");
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing problem line");
    if (seen != m) throw ParseError(lineno == 0 ? 1 : lineno, "declared " + std::to_string(m) +
                                    " edges, found " + std::to_string(seen));
    return Graph::from_edges(n, edges);
}

std::string format_graph_text(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << "p " << g.order() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

Hypergraph parse_hypergraph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
            throw std::invalid_argument("expected {\"n\": ..., \"edges\": [...]}");
        int n = j.at("n").get<int>();
        std::vector<std::vector<int>> edges;
        for (const auto& e : j.at("edges")) edges.push_back(e.get<std::vector<int>>());
        return Hypergraph(n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, std::string("hypergraph JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::vector<double> parse_weights_json(const std::string& text, int n) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError(0, "weights: expected a JSON array");
    std::vector<double> w;
    for (const auto& x : j) {
        if (!x.is_number()) throw ParseError(0, "weights: non-numeric entry");
        w.push_back(x.get<double>());
    }
    if (int(w.size()) != n)
        throw ParseError(0, "weights: expected " + std::to_string(n) + " entries, got " +
                         std::to_string(w.size()));
    check_weights(w);
    return w;
}

std::vector<double> resolve_weights(const std::string& spec, int n) {
    if (spec.empty()) return std::vector<double>(n, 1.0);
    if (spec[0] == '@') return parse_weights_json(read_file(spec.substr(1)), n);
    std::vector<double> w;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace((unsigned char)item[pos])) ++pos;
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
            w.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(0, "weights: cannot parse entry '" + item + "'");
        }
    }
    if (int(w.size()) != n)
        throw ParseError(0, "weights: expected " + std::to_string(n) + " entries, got " +
                         std::to_string(w.size()));
    check_weights(w);
    return w;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace gdw

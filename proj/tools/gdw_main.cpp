#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gdw/acceptance.hpp"
#include "gdw/btransform.hpp"
#include "gdw/contextuality.hpp"
#include "gdw/errors.hpp"
#include "gdw/graph.hpp"
#include "gdw/hypergraph.hpp"
#include "gdw/invariants.hpp"
#include "gdw/io.hpp"
#include "gdw/jsonout.hpp"

using namespace gdw;

namespace {

// Exit codes, also listed in the README: 0 ok, 1 acceptance failures,
// 2 parse or usage error, 3 solver failure, 4 strict residual breach,
// 5 handle audit failure, 6 invalid probabilistic model, 7 budget exceeded.

struct GlobalOpts {
    double tol = 1e-6;
    std::uint64_t seed = 0;
    bool strict = false;
    bool one_based = false;
    long long budget = 4096;
    std::string format = "json";
    std::string output = "-";
};

NumericConfig make_cfg(const GlobalOpts& g) {
    NumericConfig cfg;
    cfg.seed = g.seed;
    cfg.vertex_budget = g.budget;
    cfg.transform_tol = g.tol;
    return cfg;
}

void emit(const GlobalOpts& g, const std::string& text) {
    if (g.output == "-") {
        fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw ParseError(0, "cannot open output file: " + g.output);
    out << text;
}

// tsv rendering of a number; JSON goes through JsonWriter instead
std::string num(double v) {
    return std::isinf(v) ? std::string("inf") : JsonWriter::format_double(v);
}

double rel_residual(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> parse_csv_numbers(const std::string& spec) {
    std::vector<double> out;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            size_t pos = 0;
            double v = std::stod(item, &pos);
            while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) ++pos;
            if (pos != item.size()) throw std::invalid_argument("trailing characters");
            out.push_back(v);
        } catch (const std::exception&) {
            throw ParseError(0, "cannot parse number '" + item + "'");
        }
    }
    if (out.empty()) throw ParseError(0, "empty number list");
    return out;
}

Graph load_graph(const GlobalOpts& g, const std::string& path) {
    return parse_graph_text(read_file(path), g.one_based);
}

int cmd_invariants(const GlobalOpts& g, const std::string& graph_file, const std::string& wspec) {
    const Graph gr = load_graph(g, graph_file);
    const auto p = resolve_weights(wspec, gr.order());
    const NumericConfig cfg = make_cfg(g);
    const AlphaResult a = alpha(gr, p);
    const AlphaStarResult as = alpha_star(gr, p, cfg);
    const ThetaResult th = lovasz_theta(gr, p, cfg);
    if (g.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("alpha").value(a.value);
        w.key("alpha_star").value(as.value);
        w.key("theta").value(th.value);
        w.key("certificates").begin_object();
        w.key("alpha_set").value(a.best_set.to_list());
        w.key("alpha_nodes").value(a.nodes);
        w.key("packing").value(as.q);
        w.key("packing_gap").value(as.duality_gap);
        w.key("theta_gap").value(th.gap);
        w.key("theta_iterations").value(th.iterations);
        w.end_object();
        w.end_object();
        emit(g, w.str() + "\n");
    } else {
        emit(g, "alpha\t" + num(a.value) + "\nalpha_star\t" + num(as.value) + "\ntheta\t" +
                    num(th.value) + "\n");
    }
    return 0;
}

int cmd_duality(const GlobalOpts& g, const std::string& graph_file, const std::string& wspec) {
    const Graph gr = load_graph(g, graph_file);
    const auto p = resolve_weights(wspec, gr.order());
    const NumericConfig cfg = make_cfg(g);
    const Graph gc = complement(gr);
    struct Row {
        const char* name;
        double lhs, rhs;
    };
    // each invariant of the graph against the transform of the complementary
    // invariant, the pairing being independence with fractional packing and
    // the Lovasz number with itself
    std::vector<Row> rows;
    rows.push_back({"independence", alpha(gr, p).value,
                    beval(make_alpha_star_handle(gc, cfg), p, g.tol, cfg).value});
    rows.push_back({"fractional-packing", alpha_star(gr, p, cfg).value,
                    beval(make_alpha_handle(gc), p, g.tol, cfg).value});
    rows.push_back({"lovasz", lovasz_theta(gr, p, cfg).value,
                    beval(make_theta_handle(gc, cfg), p, g.tol, cfg).value});
    double worst = 0.0;
    for (const Row& r : rows) worst = std::max(worst, rel_residual(r.lhs, r.rhs));
    if (g.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("identities").begin_array();
        for (const Row& r : rows) {
            w.begin_object();
            w.key("name").value(r.name);
            w.key("lhs").value(r.lhs);
            w.key("rhs").value(r.rhs);
            w.key("residual").value(rel_residual(r.lhs, r.rhs));
            w.end_object();
        }
        w.end_array();
        w.key("max_residual").value(worst);
        w.key("tol").value(g.tol);
        w.end_object();
        emit(g, w.str() + "\n");
    } else {
        std::string t;
        for (const Row& r : rows)
            t += std::string(r.name) + "\t" + num(r.lhs) + "\t" + num(r.rhs) + "\t" +
                 num(rel_residual(r.lhs, r.rhs)) + "\n";
        emit(g, t);
    }
    return g.strict && worst > g.tol ? 4 : 0;
}

std::vector<std::vector<double>> collect_points(const std::vector<std::string>& inline_points,
                                                const std::string& points_file) {
    std::vector<std::vector<double>> pts;
    for (const auto& s : inline_points) pts.push_back(parse_csv_numbers(s));
    if (!points_file.empty()) {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(read_file(points_file));
        } catch (const nlohmann::json::parse_error& e) {
            throw ParseError(0, std::string("points: invalid JSON: ") + e.what());
        }
        try {
            if (!j.is_array()) throw std::invalid_argument("points: expected a JSON array");
            if (!j.empty() && j.front().is_number()) {
                pts.push_back(j.get<std::vector<double>>());
            } else {
                for (const auto& row : j) pts.push_back(row.get<std::vector<double>>());
            }
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(0, std::string("points: ") + e.what());
        }
    }
    if (pts.empty()) throw std::invalid_argument("no points given; use --point or --points");
    for (const auto& q : pts)
        if (q.size() != pts.front().size())
            throw std::invalid_argument("points must all share one dimension");
    return pts;
}

FunctionHandle resolve_fn(const GlobalOpts& g, const std::string& name, int dim,
                          const std::string& graph_file, const std::string& table_file, int kmax,
                          const NumericConfig& cfg) {
    FunctionHandle h;
    if (name == "custom") {
        if (table_file.empty()) throw std::invalid_argument("--fn custom needs --table");
        h = make_custom_handle(read_file(table_file));
    } else if (name.rfind("graph-", 0) == 0) {
        if (graph_file.empty())
            throw std::invalid_argument("function '" + name + "' needs --graph");
        const Graph gr = load_graph(g, graph_file);
        if (name == "graph-alpha")
            h = make_alpha_handle(gr);
        else if (name == "graph-alpha-star")
            h = make_alpha_star_handle(gr, cfg);
        else if (name == "graph-theta")
            h = make_theta_handle(gr, cfg);
        else if (name == "graph-capacity")
            h = make_capacity_level_handle(gr, kmax, cfg);
        else
            throw std::invalid_argument("unknown function name '" + name + "'");
    } else if (name.rfind("norm-", 0) == 0) {
        const std::string s = name.substr(5);
        double pn = 0.0;
        if (s == "inf") {
            pn = std::numeric_limits<double>::infinity();
        } else {
            try {
                size_t pos = 0;
                pn = std::stod(s, &pos);
                if (pos != s.size()) throw std::invalid_argument("trailing characters");
            } catch (const std::exception&) {
                throw std::invalid_argument("unknown function name '" + name + "'");
            }
        }
        h = make_norm_handle(dim, pn);
    } else {
        throw std::invalid_argument("unknown function name '" + name + "'");
    }
    if (h.dim != dim)
        throw std::invalid_argument("function dimension " + std::to_string(h.dim) +
                                    " does not match point dimension " + std::to_string(dim));
    return h;
}

int cmd_transform(const GlobalOpts& g, const std::string& fn_name,
                  const std::vector<std::string>& inline_points, const std::string& points_file,
                  const std::string& graph_file, const std::string& table_file, int kmax) {
    const auto pts = collect_points(inline_points, points_file);
    const NumericConfig cfg = make_cfg(g);
    const FunctionHandle h =
        resolve_fn(g, fn_name, static_cast<int>(pts.front().size()), graph_file, table_file, kmax, cfg);
    std::vector<TransformReport> reports;
    for (const auto& q : pts) reports.push_back(beval(h, q, g.tol, cfg));
    if (g.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("fn").value(fn_name);
        w.key("tol").value(g.tol);
        w.key("points").begin_array();
        for (const auto& r : reports) {
            w.begin_object();
            w.key("point").value(r.p);
            w.key("value").value(r.value);
            w.key("argmax").value(r.q);
            w.key("evaluations").value(r.evaluations);
            w.key("starts").value(r.starts);
            w.key("spread").value(r.spread);
            w.end_object();
        }
        w.end_array();
        w.end_object();
        emit(g, w.str() + "\n");
    } else {
        std::string t;
        for (const auto& r : reports) {
            std::string coords;
            for (size_t i = 0; i < r.p.size(); i++)
                coords += (i ? "," : "") + num(r.p[i]);
            t += coords + "\t" + num(r.value) + "\n";
        }
        emit(g, t);
    }
    return 0;
}

int cmd_contextuality(const GlobalOpts& g, const std::string& scenario_file,
                      const std::string& model_spec) {
    const Hypergraph h = parse_hypergraph_json(read_file(scenario_file));
    const ProbModel p = resolve_weights(model_spec, h.order());
    validate_model(h, p);
    const NumericConfig cfg = make_cfg(g);
    const double ccl = cmax_classical(h, p, cfg);
    const double cce = cmax_ce1(h, p, cfg);
    const double rhs_cl = cmax_graph_rhs(h, p, ModelClass::classical, cfg);
    const double rhs_q = cmax_graph_rhs(h, p, ModelClass::q, cfg);
    const double rhs_ce = cmax_graph_rhs(h, p, ModelClass::ce1, cfg);
    auto resid = [](double a, double b) {
        if (std::isinf(a) && std::isinf(b)) return 0.0;
        if (std::isinf(a) || std::isinf(b)) return std::numeric_limits<double>::infinity();
        return std::abs(a - b);
    };
    const double res_cl = resid(ccl, rhs_cl);
    const double res_ce = resid(cce, rhs_ce);
    const bool has_witness = !std::isinf(ccl);
    BellWitness bw;
    if (has_witness) bw = bell_witness(h, p, cfg);
    if (g.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("cmax_classical").value(ccl);
        w.key("cmax_ce1").value(cce);
        w.key("rhs").begin_object();
        w.key("classical").value(rhs_cl);
        w.key("q").value(rhs_q);
        w.key("ce1").value(rhs_ce);
        w.end_object();
        w.key("residuals").begin_object();
        w.key("classical").value(res_cl);
        w.key("ce1").value(res_ce);
        w.end_object();
        w.key("witness");
        if (has_witness) {
            w.begin_object();
            w.key("w").value(bw.w);
            w.key("bound").value(bw.bound);
            w.key("ratio").value(bw.ratio);
            w.end_object();
        } else {
            w.null();
        }
        w.end_object();
        emit(g, w.str() + "\n");
    } else {
        std::string t;
        t += "cmax_classical\t" + num(ccl) + "\n";
        t += "cmax_ce1\t" + num(cce) + "\n";
        t += "rhs_classical\t" + num(rhs_cl) + "\n";
        t += "rhs_q\t" + num(rhs_q) + "\n";
        t += "rhs_ce1\t" + num(rhs_ce) + "\n";
        if (has_witness) t += "witness_ratio\t" + num(bw.ratio) + "\n";
        emit(g, t);
    }
    const double worst = std::max(res_cl, res_ce);
    return g.strict && worst > g.tol ? 4 : 0;
}

int cmd_capacity(const GlobalOpts& g, const std::string& graph_file, const std::string& wspec,
                 int kmax) {
    const Graph gr = load_graph(g, graph_file);
    const auto p = resolve_weights(wspec, gr.order());
    const NumericConfig cfg = make_cfg(g);
    // reject the whole request up front, otherwise the within-budget levels
    // would grind away before the offending power is reached
    const double need = std::pow(static_cast<double>(gr.order()), static_cast<double>(kmax));
    if (need > static_cast<double>(g.budget))
        throw BudgetError(static_cast<long long>(std::min(need, 4.0e18)), g.budget);
    std::vector<double> levels;
    double best = 0.0;
    for (int k = 1; k <= kmax; k++) {
        best = std::max(best, capacity_lower_bound(gr, p, k, cfg));
        levels.push_back(best); // best bound using powers up to k, nondecreasing
    }
    const double upper = lovasz_theta(gr, p, cfg).value;
    const BoundInterval dual = dual_capacity_bounds(gr, p, kmax, cfg);
    if (g.format == "json") {
        JsonWriter w;
        w.begin_object();
        w.key("kmax").value(kmax);
        w.key("levels").value(levels);
        w.key("lower").value(best);
        w.key("upper").value(upper);
        w.key("dual_interval").begin_object();
        w.key("lower").value(dual.lower);
        w.key("upper").value(dual.upper);
        w.end_object();
        w.end_object();
        emit(g, w.str() + "\n");
    } else {
        std::string t;
        for (size_t k = 0; k < levels.size(); k++)
            t += "level\t" + std::to_string(k + 1) + "\t" + num(levels[k]) + "\n";
        t += "lower\t" + num(best) + "\nupper\t" + num(upper) + "\n";
        t += "dual_lower\t" + num(dual.lower) + "\ndual_upper\t" + num(dual.upper) + "\n";
        emit(g, t);
    }
    return 0;
}

int cmd_reproduce(const GlobalOpts& g, const std::string& only_csv, bool quiet) {
    AcceptanceOptions opt;
    opt.seed = g.seed;
    opt.progress = !quiet;
    if (!only_csv.empty())
        for (double v : parse_csv_numbers(only_csv)) opt.only.push_back(static_cast<int>(v));
    const auto results = run_acceptance(opt);
    emit(g, acceptance_table(results));
    int fails = 0;
    for (const auto& r : results) fails += r.passed ? 0 : 1;
    return fails == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weighted graph invariants, their ratio-supremum transform, and "
                 "contextuality distance reports",
                 "gdw"};
    GlobalOpts G;
    app.add_option("--tol", G.tol, "relative tolerance for transform evaluation and residual checks")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", G.seed, "seed for randomized search phases")->capture_default_str();
    app.add_flag("--strict", G.strict, "exit 4 when a reported residual exceeds the tolerance");
    app.add_flag("--one-based", G.one_based, "graph files number vertices from 1");
    app.add_option("--budget", G.budget, "vertex budget for graph powers")
        ->envname("GDW_BUDGET")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--format", G.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}))
        ->capture_default_str();
    app.add_option("--output", G.output, "output path, - for stdout")->capture_default_str();
    app.require_subcommand(1);

    std::string graph_file, weights, fn_name, points_file, table_file, scenario_file, model_spec;
    std::string only_csv;
    std::vector<std::string> inline_points;
    int kmax = 2, fn_kmax = 1;
    bool quiet = false;

    auto* inv = app.add_subcommand(
        "invariants", "independence, fractional packing, and Lovasz numbers of a weighted graph");
    inv->add_option("graph", graph_file, "graph file")->required();
    inv->add_option("--weights", weights, "comma list or @file, one weight per vertex (default ones)");
    inv->fallthrough();

    auto* dua = app.add_subcommand(
        "duality", "each invariant against the transform of its complementary invariant");
    dua->add_option("graph", graph_file, "graph file")->required();
    dua->add_option("--weights", weights, "comma list or @file, one weight per vertex (default ones)");
    dua->fallthrough();

    auto* tra = app.add_subcommand("transform",
                                   "evaluate the ratio-supremum transform of a named function");
    tra->add_option("--fn", fn_name,
                    "norm-<p>, norm-inf, graph-alpha, graph-alpha-star, graph-theta, "
                    "graph-capacity, or custom")
        ->required();
    tra->add_option("--point", inline_points, "evaluation point as a comma list, repeatable");
    tra->add_option("--points", points_file, "JSON file with one point or an array of points");
    tra->add_option("--graph", graph_file, "graph file backing the graph-* functions");
    tra->add_option("--table", table_file, "JSON simplex table backing --fn custom");
    tra->add_option("--kmax", fn_kmax, "levels for graph-capacity")->check(CLI::PositiveNumber);
    tra->fallthrough();

    auto* ctx = app.add_subcommand("contextuality",
                                   "distance-to-model-class report for a scenario and model");
    ctx->add_option("scenario", scenario_file, "hypergraph JSON file")->required();
    ctx->add_option("--model", model_spec, "comma list or @file, one probability per vertex")
        ->required();
    ctx->fallthrough();

    auto* cap = app.add_subcommand("capacity",
                                   "independence growth bounds under strong graph powers");
    cap->add_option("graph", graph_file, "graph file")->required();
    cap->add_option("--weights", weights, "comma list or @file, one weight per vertex (default ones)");
    cap->add_option("--kmax", kmax, "highest graph power to evaluate")->check(CLI::PositiveNumber);
    cap->fallthrough();

    auto* rep = app.add_subcommand("reproduce-paper",
                                   "run the acceptance criteria and print a pass/fail table");
    rep->add_option("--only", only_csv, "comma list of criterion indices to run");
    rep->add_flag("--quiet", quiet, "suppress per-criterion progress on stderr");
    rep->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (inv->parsed()) return cmd_invariants(G, graph_file, weights);
        if (dua->parsed()) return cmd_duality(G, graph_file, weights);
        if (tra->parsed())
            return cmd_transform(G, fn_name, inline_points, points_file, graph_file, table_file,
                                 fn_kmax);
        if (ctx->parsed()) return cmd_contextuality(G, scenario_file, model_spec);
        if (cap->parsed()) return cmd_capacity(G, graph_file, weights, kmax);
        if (rep->parsed()) return cmd_reproduce(G, only_csv, quiet);
        fprintf(stderr, "error: no command\n");
        return 2;
    } catch (const ParseError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const BudgetError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 7;
    } catch (const AuditError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 5;
    } catch (const ModelError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 6;
    } catch (const SolverError& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}

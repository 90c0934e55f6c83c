#pragma once

#include <stdexcept>
#include <string>

namespace gdw {

// Input text could not be parsed; line is 1-based, 0 when not line-oriented.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

// A construction would exceed the configured vertex budget.
struct BudgetError : std::runtime_error {
    long long requested, budget;
    BudgetError(long long requested_, long long budget_)
        : std::runtime_error("vertex budget exceeded: need " + std::to_string(requested_) +
                             ", budget " + std::to_string(budget_)),
          requested(requested_), budget(budget_) {}
};

// A numeric solver failed; stage names the solver ("lp", "sdp", ...).
struct SolverError : std::runtime_error {
    std::string stage;
    SolverError(const std::string& stage_, const std::string& msg)
        : std::runtime_error(stage_ + ": " + msg), stage(stage_) {}
};

// A function handle failed its construction audit; axiom names the
// violated requirement ("positive-affine", "nondegenerate", "finite").
struct AuditError : std::runtime_error {
    std::string axiom;
    AuditError(const std::string& axiom_, const std::string& msg)
        : std::runtime_error("handle audit failed [" + axiom_ + "]: " + msg), axiom(axiom_) {}
};

// A probabilistic model violates an edge normalization; cites the edge and its sum.
struct ModelError : std::runtime_error {
    int edge;
    double sum;
    ModelError(int edge_, double sum_, const std::string& msg)
        : std::runtime_error(msg), edge(edge_), sum(sum_) {}
};

} // namespace gdw

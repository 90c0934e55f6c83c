#pragma once

#include <string>
#include <vector>

#include "gdw/hypergraph.hpp"
#include "gdw/numeric.hpp"

namespace gdw {

// Probabilistic model on a scenario: one probability per vertex, every
// hyperedge summing to one.
using ProbModel = std::vector<double>;

// Model classes ordered by inclusion: classical inside q inside q1 inside
// ce1. Distances are computable for classical and ce1; q and q1 only route
// to their graph-invariant formulas.
enum class ModelClass { classical, q, q1, ce1 };

// Accepts "classical", "q", "q1", "ce1". Throws std::invalid_argument on
// anything else.
ModelClass parse_model_class(const std::string& name);

// Checks that p has one entry per vertex, entries are finite and lie in
// [0, 1], and every hyperedge sums to one within 1e-9. Throws ModelError
// citing the offending edge and its sum; entry violations carry edge -1.
void validate_model(const Hypergraph& h, const ProbModel& p);

// All 0/1 models whose support meets every hyperedge exactly once,
// enumerated by backtracking over edges in increasing size order. An empty
// list is a legitimate outcome. More than a million partial assignments
// throws SolverError.
std::vector<ProbModel> deterministic_models(const Hypergraph& h);

// log2 of the least factor lambda >= 1 with p <= lambda * q pointwise, the
// max-relative entropy of p to q in bits. +infinity when q vanishes
// somewhere p does not.
double dmax(const ProbModel& p, const ProbModel& q);

// Cover program over deterministic models and its dual. Primal: least total
// mass of a nonnegative combination of deterministic models dominating p
// pointwise. Dual: best score <p, w> of nonnegative vertex weights w with
// <m, w> <= 1 for every deterministic model m. The two optima are required
// to agree within 1e-7. infinite is set when no deterministic models exist
// or the support of p cannot be dominated.
struct ClassicalCover {
    double primal = 0.0;
    double dual = 0.0;
    std::vector<double> mix; // optimal mass per deterministic model
    std::vector<double> w;   // optimal vertex weights
    int model_count = 0;
    bool infinite = false;
};
ClassicalCover classical_cover(const Hypergraph& h, const ProbModel& p,
                               const NumericConfig& cfg = NumericConfig{});

// Distance in bits from p to the classical set: log2 of the cover optimum,
// +infinity when the classical set is empty or cannot dominate p.
double cmax_classical(const Hypergraph& h, const ProbModel& p,
                      const NumericConfig& cfg = NumericConfig{});

// Distance in bits from p to the consistent-exclusivity set: minimize t
// such that some r >= p has every hyperedge summing to exactly t and every
// maximal independent set of the non-orthogonality graph summing to at most
// t. +infinity when no such r exists (the set is empty). Finite optima are
// cross-checked against the weighted independence number of the
// non-orthogonality graph; disagreement beyond 1e-6 bits throws SolverError.
double cmax_ce1(const Hypergraph& h, const ProbModel& p,
                const NumericConfig& cfg = NumericConfig{});

// Closed-form counterparts: log2 of the weighted invariant of the
// non-orthogonality graph at p. classical uses fractional packing, q and q1
// the Lovasz number, ce1 the independence number.
double cmax_graph_rhs(const Hypergraph& h, const ProbModel& p, ModelClass which,
                      const NumericConfig& cfg = NumericConfig{});

// Largest score <m, w> of the nonnegative weight vector w over
// deterministic models; every classical model obeys <p_cl, w> <= this
// bound. Throws SolverError when the scenario has no deterministic models.
double bell_bound(const Hypergraph& h, const std::vector<double>& w);

// Weighted inequality separating a model from the classical set.
struct BellWitness {
    std::vector<double> w; // nonnegative vertex weights
    double bound = 0.0;    // classical bound, the best <m, w> over deterministic models
    double ratio = 0.0;    // <p, w> / bound, the violation achieved by p
};

// Packages the dual-optimal weights of the cover program as an inequality:
// classical models score at most bound, while p scores bound * ratio, and
// the ratio is at least the cover optimum up to solver tolerance. Throws
// SolverError when the scenario has no deterministic models or p cannot be
// dominated.
BellWitness bell_witness(const Hypergraph& h, const ProbModel& p,
                         const NumericConfig& cfg = NumericConfig{});

} // namespace gdw

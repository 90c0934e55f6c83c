#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gdw/graph.hpp"
#include "gdw/numeric.hpp"
#include "gdw/simplex_opt.hpp"

namespace gdw {

// A positive, 1-homogeneous function on the nonnegative orthant, passed
// around as an evaluator closure. The convexity and monotonicity flags are
// declarations by the constructor, not detected properties; they decide
// which optimizer guarantee applies (a declared-convex handle makes the
// ratio <p,q>/f(q) quasi-concave, so few starts suffice). When both c1 and
// c2 are positive they promise c1*|q|_2 <= f(q) <= c2*|q|_2.
struct FunctionHandle {
    int dim = 0;
    std::string name;
    std::function<double(const std::vector<double>&)> eval;
    bool declared_convex = false;
    bool declared_monotone = false;
    double c1 = 0.0;
    double c2 = 0.0;
};

// Result of one transform evaluation. The value always equals <p,q>/f(q) at
// the reported q, because it is taken from an actual evaluation there; it is
// therefore a valid lower bound on the supremum no matter how the search went.
struct TransformReport {
    std::vector<double> p;
    double value = 0.0;
    std::vector<double> q;
    int starts = 0;
    long long evaluations = 0;
    // multistart search: best minus worst start after the coarse phase;
    // cutting-plane evaluation: final relaxation value minus the certified one
    double spread = 0.0;
};

struct InvolutionReport {
    double max_gap = 0.0; // largest (f - transform^2 f)/f over the samples
    double min_gap = 0.0;
    std::string classification; // "fixed-point-consistent" or "not-invariant"
};

struct CubedReport {
    double max_deviation = 0.0; // relative, per sample below
    std::vector<double> deviations;
};

// (Bf)(p) = sup over q != 0 of <p,q>/f(q), evaluated on the simplex since the
// ratio is scale invariant. Entries of p must be nonnegative; p = 0 gives 0.
// A declared-convex handle runs a certified cutting-plane loop (the supremum
// is a convex program there), falling back to the global simplex search if
// the relaxation gap will not close; everything else is searched directly.
// The options overload always runs the search.
TransformReport beval(const FunctionHandle& f, const std::vector<double>& p, double tol = 1e-6,
                      const NumericConfig& cfg = {});
TransformReport beval(const FunctionHandle& f, const std::vector<double>& p, const SimplexMaxOptions& opt);

// (B(Bf))(p) with the inner transform evaluated on demand at each outer query
// point, cached by quantized query. Every solved inner problem yields an
// exact linear minorant of the inner transform; the outer step maximizes the
// relaxation those minorants define (a linear program bounding the result
// from above) and certifies each proposal by a true inner solve, stopping
// once the two meet within tol. Inner tolerance is tol/4.
double bsquare(const FunctionHandle& f, const std::vector<double>& p, double tol = 1e-6,
               const NumericConfig& cfg = {});

// Checks B^2 f <= f at every sample and classifies the handle as
// fixed-point-consistent when equality holds within tol everywhere.
InvolutionReport involution_check(const FunctionHandle& f, const std::vector<std::vector<double>>& samples,
                                  double tol, const NumericConfig& cfg = {});

// Max relative deviation between the triple and single transform. The inner
// transform is first materialized as a finite max-linear minorant on a fixed
// simplex grid; its own transform is then an exact linear program, and the
// outermost layer runs the real simplex search. Guarded to dim <= 3.
CubedReport b_cubed_identity_check(const FunctionHandle& f, const std::vector<std::vector<double>>& samples,
                                   double tol, const NumericConfig& cfg = {});

// True iff Bf = f within tol at every sample. Also compares f against the
// Euclidean norm and insists the two verdicts agree, since a self-fixed
// handle must be that norm; disagreement throws.
bool norm_fixed_point_check(const FunctionHandle& f, const std::vector<std::vector<double>>& samples,
                            double tol, const NumericConfig& cfg = {});

// Handle factories. Every returned handle has been audited: positivity and
// exact degree-1 scaling are probed at the vertices and at random points, and
// a violation throws AuditError naming the broken axiom. Graph-backed
// handles wrap the invariant so that scaling holds exactly, and declare
// convexity and monotonicity (both hold for these invariants); the staged
// capacity bound does so only at level 1, where it coincides with the
// independence number.
FunctionHandle make_norm_handle(int dim, double pnorm); // pnorm >= 1, INFINITY for the max norm
FunctionHandle make_linear_handle(const std::vector<double>& a);
FunctionHandle make_max_linear_handle(const std::vector<std::vector<double>>& rows);
FunctionHandle make_alpha_handle(const Graph& g);
FunctionHandle make_alpha_star_handle(const Graph& g, const NumericConfig& cfg = {});
FunctionHandle make_theta_handle(const Graph& g, const NumericConfig& cfg = {});
FunctionHandle make_capacity_level_handle(const Graph& g, int kmax, const NumericConfig& cfg = {});
FunctionHandle scale_handle(const FunctionHandle& f, double s);

// Tabulated handle from JSON {"n":..., "grid":..., "values":[...]}: values on
// the simplex lattice with grid points per edge, listed in ascending
// lexicographic order of the lattice coordinates, linearly interpolated and
// extended by homogeneity. Optional fields: name, convex, monotone, c1, c2.
FunctionHandle make_custom_handle(const std::string& json_text);

void audit_handle(const FunctionHandle& f, std::uint64_t seed = 0);

} // namespace gdw

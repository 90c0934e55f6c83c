#include "gdw/btransform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gdw/errors.hpp"
#include "gdw/invariants.hpp"
#include "gdw/lp.hpp"

namespace gdw {

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

std::string fmt_point(const std::vector<double>& q) {
    std::string out = "(";
    char buf[32];
    for (size_t i = 0; i < q.size(); i++) {
        std::snprintf(buf, sizeof buf, "%.6g", q[i]);
        if (i) out += ", ";
        out += buf;
    }
    return out + ")";
}

void check_transform_point(const FunctionHandle& f, const std::vector<double>& p) {
    if (f.dim < 1 || !f.eval) throw std::invalid_argument("handle has no evaluator");
    if (static_cast<int>(p.size()) != f.dim)
        throw std::invalid_argument("point length " + std::to_string(p.size()) +
                                    " does not match handle dimension " + std::to_string(f.dim));
    for (double v : p) {
        if (!std::isfinite(v) || v < 0.0)
            throw std::invalid_argument("transform input must be finite and >= 0");
    }
}

bool all_zero(const std::vector<double>& p) {
    for (double v : p) {
        if (v != 0.0) return false;
    }
    return true;
}

// Effort policy. A declared-convex handle makes the ratio quasi-concave, so
// a couple of interior starts already find the global maximum; everything
// else gets the full multistart. Loose tolerances shrink the budgets, which
// matters when the evaluation is itself a solve.
SimplexMaxOptions beval_options(const FunctionHandle& f, double tol, const NumericConfig& cfg) {
    SimplexMaxOptions o;
    o.seed = cfg.seed;
    const bool coarse = tol >= 1e-3;
    if (f.declared_convex) {
        o.random_starts = coarse ? 1 : 2;
        o.coarse_iters = coarse ? 10 : 25;
        o.refine_iters = coarse ? 50 : 200;
        o.pairwise_sweeps = 1;
    } else {
        o.random_starts = coarse ? std::max(8, cfg.multistart_random / 4) : cfg.multistart_random;
        o.coarse_iters = coarse ? 15 : 40;
        o.refine_iters = coarse ? 80 : 300;
        o.pairwise_sweeps = 2;
    }
    return o;
}

// Exact degree-1 scaling for handles whose raw evaluator only carries it up
// to solver noise: evaluate at the normalized point and scale back.
std::function<double(const std::vector<double>&)> homogenize(
    std::function<double(const std::vector<double>&)> base) {
    return [base = std::move(base)](const std::vector<double>& q) -> double {
        double s = 0.0;
        for (double v : q) s += v;
        if (!(s > 0.0)) return 0.0;
        std::vector<double> u(q.size());
        for (size_t i = 0; i < q.size(); i++) u[i] = q[i] / s;
        return s * base(u);
    };
}

// Certified cutting-plane evaluation for a declared-convex handle. After
// scaling, the transform is max <p,q> over q >= 0 with f(q) <= 1. Finite
// difference subgradients give linear cuts <a,q> <= 1 that keep the linear
// program an outer relaxation, so its value bounds the transform from above,
// while every proposal is scored by a true ratio at an evaluated point.
// Cut bases are nudged off the proposal by a small deterministic jitter:
// proposals of max-type handles sit exactly on ties, where a central
// difference averages the meeting pieces into a slope no piece has, and the
// resulting false cut can sever the true optimum yet stay tight along the
// certified points. At a jittered base a single piece is active and the
// tangent there is a genuine minorant. Residual wobble (difference noise,
// a step crossing a breakpoint) is caught by shrinking any cut seen to
// overshoot f at a later evaluation, with the gap test suspended on rounds
// where that happened. Nonconvergence is reported, not patched: the caller
// falls back to the global search.
struct CutLoopResult {
    bool converged = false;
    TransformReport rep;
};

CutLoopResult beval_cutting(const FunctionHandle& f, const std::vector<double>& p, double tol,
                            const NumericConfig& cfg) {
    const int n = f.dim;
    CutLoopResult out;
    out.rep.p = p;
    out.rep.starts = 1;
    out.rep.q.assign(n, 1.0 / n);
    long long evals = 0;
    const auto ev = [&](const std::vector<double>& q) {
        evals++;
        return f.eval(q);
    };

    SplitMix64 jitter_rng(cfg.seed ^ 0x7f4a7c15ULL);
    std::vector<std::vector<double>> cuts;
    const auto cut_at = [&](const std::vector<double>& r) -> bool {
        double scale = 0.0;
        for (double v : r) scale = std::max(scale, v);
        if (!(scale > 0.0)) return false;
        std::vector<double> base(n);
        for (int i = 0; i < n; i++) base[i] = r[i] + 1e-3 * scale * (1.0 + jitter_rng.uniform());
        const double fb = ev(base);
        if (!std::isfinite(fb) || fb <= 0.0) return false;
        const double h = 1e-5 * scale;
        std::vector<double> a(n);
        std::vector<double> shifted = base;
        for (int i = 0; i < n; i++) {
            shifted[i] = base[i] + h;
            const double fp = ev(shifted);
            shifted[i] = base[i] - h;
            const double fm = ev(shifted);
            shifted[i] = base[i];
            const double g = (fp - fm) / (2.0 * h);
            if (!std::isfinite(g)) return false;
            a[i] = g;
        }
        const double e = dot(a, base);
        if (!(e > 0.0) || !std::isfinite(e)) return false;
        const double s = fb / e; // degree one makes the tight cut pass through the base
        for (double& v : a) v *= s;
        cuts.push_back(std::move(a));
        return true;
    };

    double best = 0.0;
    std::vector<double> bestq;
    const auto score = [&](const std::vector<double>& u, double fu, bool& shrunk) {
        const double val = dot(p, u) / fu;
        if (val > best) {
            best = val;
            bestq = u;
        }
        for (auto& a : cuts) {
            const double az = dot(a, u);
            if (az > fu * (1.0 + 1e-9)) {
                const double sh = fu / az;
                for (double& v : a) v *= sh;
                shrunk = true;
            }
        }
    };
    const auto normalize = [](std::vector<double> q) {
        double s = 0.0;
        for (double& v : q) {
            v = std::max(v, 0.0);
            s += v;
        }
        if (!(s > 0.0)) {
            q.clear();
            return q;
        }
        for (double& v : q) v /= s;
        return q;
    };

    // vertex evaluations seed the cuts; a monotone handle admits the exact
    // box cut q_i f(e_i) <= f(q), anything else gets a subgradient there
    for (int i = 0; i < n; i++) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        const double fe = ev(e);
        if (!std::isfinite(fe) || fe <= 0.0) return out;
        if (f.declared_monotone) {
            std::vector<double> a(n, 0.0);
            a[i] = fe;
            cuts.push_back(std::move(a));
        } else if (!cut_at(e)) {
            return out;
        }
    }
    {
        bool shrunk = false;
        const std::vector<double> bary(n, 1.0 / n);
        const double fb = ev(bary);
        if (!std::isfinite(fb) || fb <= 0.0) return out;
        cut_at(bary);
        score(bary, fb, shrunk);
        const std::vector<double> pn = normalize(p);
        const double fp = ev(pn);
        if (std::isfinite(fp) && fp > 0.0) score(pn, fp, shrunk);
    }

    double upper = std::numeric_limits<double>::infinity();
    for (int round = 0; round < 80; round++) {
        LpProblem lp;
        lp.sense = Sense::maximize;
        lp.c = p;
        for (const auto& a : cuts) {
            lp.A.push_back(a);
            lp.b.push_back(1.0);
            lp.rel.push_back(Rel::le);
        }
        const LpSolution sol = lp_solve(lp, cfg);
        if (sol.status != LpStatus::optimal) return out;
        upper = sol.value;
        if (!(upper > 0.0)) return out;
        const std::vector<double> u = normalize(sol.x);
        if (u.empty()) return out;
        const double fu = ev(u);
        if (!std::isfinite(fu) || fu <= 0.0) return out;
        bool shrunk = false;
        score(u, fu, shrunk);
        if (!shrunk && best > 0.0 && upper - best <= 0.5 * tol * best) {
            out.converged = true;
            break;
        }
        if (!cut_at(u)) return out;
    }

    out.rep.value = best;
    if (!bestq.empty()) out.rep.q = bestq;
    out.rep.evaluations = evals;
    out.rep.spread = std::isfinite(upper) ? std::max(0.0, upper - best) : 0.0;
    return out;
}

std::vector<std::vector<double>> audit_probes(int dim, std::uint64_t seed) {
    std::vector<std::vector<double>> probes;
    for (int i = 0; i < dim; i++) {
        std::vector<double> e(dim, 0.0);
        e[i] = 1.0;
        probes.push_back(std::move(e));
    }
    probes.emplace_back(dim, 1.0 / dim);
    SplitMix64 rng(seed);
    for (int k = 0; k < 32; k++) {
        std::vector<double> q(dim);
        double s = 0.0;
        for (int i = 0; i < dim; i++) {
            q[i] = -std::log(rng.uniform());
            s += q[i];
        }
        for (int i = 0; i < dim; i++) q[i] /= s;
        probes.push_back(std::move(q));
    }
    return probes;
}

} // namespace

void audit_handle(const FunctionHandle& f, std::uint64_t seed) {
    if (f.dim < 1 || !f.eval) throw std::invalid_argument("handle has no evaluator");
    SplitMix64 rng(seed + 0x51ed2701);
    for (const auto& q : audit_probes(f.dim, seed)) {
        const double v = f.eval(q);
        if (!std::isfinite(v))
            throw AuditError("finite", f.name + " evaluates to " + std::to_string(v) + " at " + fmt_point(q));
        if (v <= 0.0)
            throw AuditError("nondegenerate",
                             f.name + " evaluates to " + std::to_string(v) + " at " + fmt_point(q));
        const double lams[3] = {0.5, 2.0, rng.uniform(0.25, 4.0)};
        for (double lam : lams) {
            std::vector<double> qs(q.size());
            for (size_t i = 0; i < q.size(); i++) qs[i] = lam * q[i];
            const double sv = f.eval(qs);
            if (std::abs(sv - lam * v) > 1e-9 * lam * v)
                throw AuditError("positive-affine", f.name + ": f(" + std::to_string(lam) + " q) = " +
                                                       std::to_string(sv) + " but " + std::to_string(lam) +
                                                       " f(q) = " + std::to_string(lam * v) + " at q = " +
                                                       fmt_point(q));
        }
    }
}

TransformReport beval(const FunctionHandle& f, const std::vector<double>& p, const SimplexMaxOptions& opt) {
    check_transform_point(f, p);
    TransformReport rep;
    rep.p = p;
    if (all_zero(p)) {
        rep.q.assign(f.dim, 1.0 / f.dim);
        return rep;
    }
    const auto ratio = [&](const std::vector<double>& q) -> double {
        const double fv = f.eval(q);
        if (!std::isfinite(fv) || fv <= 0.0) return std::numeric_limits<double>::quiet_NaN();
        return dot(p, q) / fv;
    };
    const SimplexMaxResult res = simplex_maximize(f.dim, ratio, opt);
    rep.value = res.value;
    rep.q = res.argmax;
    rep.starts = res.starts;
    rep.evaluations = res.evaluations;
    rep.spread = res.start_spread;
    return rep;
}

TransformReport beval(const FunctionHandle& f, const std::vector<double>& p, double tol, const NumericConfig& cfg) {
    check_transform_point(f, p);
    if (f.declared_convex && f.dim >= 2 && !all_zero(p)) {
        CutLoopResult cut = beval_cutting(f, p, tol, cfg);
        if (cut.converged) return cut.rep;
        TransformReport searched = beval(f, p, beval_options(f, tol, cfg));
        if (cut.rep.value > searched.value) {
            cut.rep.evaluations += searched.evaluations;
            return cut.rep;
        }
        searched.evaluations += cut.rep.evaluations;
        return searched;
    }
    return beval(f, p, beval_options(f, tol, cfg));
}

double bsquare(const FunctionHandle& f, const std::vector<double>& p, double tol, const NumericConfig& cfg) {
    check_transform_point(f, p);
    if (all_zero(p)) return 0.0;
    const int n = f.dim;

    // Inner transform solves run at a quarter of the outer tolerance; they
    // are cached per call by quantized query point and warm-started from the
    // previous maximizer.
    const SimplexMaxOptions inner_full = beval_options(f, tol / 4.0, cfg);
    std::map<std::vector<long long>, TransformReport> cache;
    std::vector<double> warm;
    const auto inner = [&](const std::vector<double>& q) -> TransformReport {
        std::vector<long long> key(n);
        for (int i = 0; i < n; i++) key[i] = llround(q[i] * 8589934592.0); // 2^33
        if (const auto it = cache.find(key); it != cache.end()) return it->second;
        TransformReport r;
        if (f.declared_convex) {
            r = beval(f, q, tol / 4.0, cfg);
        } else {
            SimplexMaxOptions o = inner_full;
            if (!warm.empty()) o.extra_starts.push_back(warm);
            r = beval(f, q, o);
            warm = r.q;
        }
        cache.emplace(std::move(key), r);
        return r;
    };

    // The inner transform is a sup of linear functionals q -> <q, r/f(r)>,
    // so every solved inner problem hands back an exact linear minorant.
    // Maximizing <p,q> over the region those minorants cut out is a linear
    // program whose value bounds the double transform from above; each
    // program argmax is then certified by a true inner solve there, and the
    // loop stops once the relaxation and the certificate meet. The returned
    // value is always a certified ratio.
    std::vector<std::vector<double>> planes;
    const auto add_plane = [&](const std::vector<double>& r) {
        const double fv = f.eval(r);
        if (!std::isfinite(fv) || fv <= 0.0) return;
        std::vector<double> a(n);
        for (int i = 0; i < n; i++) a[i] = r[i] / fv;
        planes.push_back(std::move(a));
    };
    for (int i = 0; i < n; i++) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        add_plane(e);
    }
    const std::vector<double> bary(n, 1.0 / n);
    add_plane(bary);
    add_plane(inner(bary).q);
    {
        double s = 0.0;
        for (double v : p) s += v;
        std::vector<double> pn(n);
        for (int i = 0; i < n; i++) pn[i] = p[i] / s;
        add_plane(inner(pn).q);
    }
    if (planes.empty()) throw SolverError("transform", "handle is not positive anywhere on the simplex");

    double best = 0.0;
    for (int round = 0; round < 25; round++) {
        LpProblem lp;
        lp.sense = Sense::maximize;
        lp.c = p;
        for (const auto& a : planes) {
            lp.A.push_back(a);
            lp.b.push_back(1.0);
            lp.rel.push_back(Rel::le);
        }
        const LpSolution sol = lp_solve(lp, cfg);
        if (sol.status != LpStatus::optimal)
            throw SolverError("transform", "outer relaxation did not reach an optimum");
        std::vector<double> prop = sol.x;
        double s = 0.0;
        for (double& v : prop) {
            v = std::max(v, 0.0);
            s += v;
        }
        if (!(s > 0.0)) throw SolverError("transform", "outer relaxation proposed the zero point");
        for (double& v : prop) v /= s;
        const TransformReport cert = inner(prop);
        if (!(cert.value > 0.0)) throw SolverError("transform", "inner transform vanished at a proposal");
        best = std::max(best, dot(p, prop) / cert.value);
        // sol.value never sits below the true double transform, since the
        // planes never exceed the inner transform; the stopping slack is
        // relative because scaling p scales everything here
        if (sol.value - best <= 0.5 * tol * best) break;
        add_plane(cert.q);
    }
    return best;
}

InvolutionReport involution_check(const FunctionHandle& f, const std::vector<std::vector<double>>& samples,
                                  double tol, const NumericConfig& cfg) {
    if (samples.empty()) throw std::invalid_argument("involution check needs at least one sample");
    InvolutionReport rep;
    rep.max_gap = -std::numeric_limits<double>::infinity();
    rep.min_gap = std::numeric_limits<double>::infinity();
    for (const auto& s : samples) {
        check_transform_point(f, s);
        const double fv = f.eval(s);
        if (!std::isfinite(fv) || fv <= 0.0)
            throw SolverError("involution", "handle is not positive at sample " + fmt_point(s));
        const double b2 = bsquare(f, s, tol, cfg);
        const double gap = (fv - b2) / fv;
        rep.max_gap = std::max(rep.max_gap, gap);
        rep.min_gap = std::min(rep.min_gap, gap);
    }
    rep.classification =
        (rep.max_gap <= tol && rep.min_gap >= -tol) ? "fixed-point-consistent" : "not-invariant";
    return rep;
}

CubedReport b_cubed_identity_check(const FunctionHandle& f, const std::vector<std::vector<double>>& samples,
                                   double tol, const NumericConfig& cfg) {
    if (f.dim > 3) throw std::invalid_argument("triple transform is limited to dimension 3");
    if (samples.empty()) throw std::invalid_argument("cubed check needs at least one sample");
    const int n = f.dim;
    const int res = (n >= 3) ? 16 : 64;

    // The first transform of f is materialized as a finite max of linear
    // functionals, one per simplex lattice point. That stand-in is exactly
    // convex, monotone and degree-1, so its double transform must reproduce
    // it; the middle layer is an exact linear program and only the outer
    // layer is a search.
    std::vector<std::vector<double>> dirs;
    std::vector<int> comp(n);
    const std::function<void(int, int)> emit = [&](int idx, int left) {
        if (idx == n - 1) {
            comp[idx] = left;
            std::vector<double> r(n);
            for (int i = 0; i < n; i++) r[i] = static_cast<double>(comp[i]) / res;
            const double fv = f.eval(r);
            if (!std::isfinite(fv) || fv <= 0.0)
                throw SolverError("cubed-check", "handle is not positive at " + fmt_point(r));
            for (int i = 0; i < n; i++) r[i] /= fv;
            dirs.push_back(std::move(r));
            return;
        }
        for (int v = 0; v <= left; v++) {
            comp[idx] = v;
            emit(idx + 1, left - v);
        }
    };
    emit(0, res);

    const auto ghat = [&dirs](const std::vector<double>& u) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& a : dirs) best = std::max(best, dot(a, u));
        return best;
    };
    FunctionHandle mid;
    mid.dim = n;
    mid.name = "B2[" + f.name + "]";
    mid.declared_convex = true;
    mid.declared_monotone = true;
    mid.eval = [&dirs, cfg](const std::vector<double>& q) {
        LpProblem lp;
        lp.sense = Sense::maximize;
        lp.c = q;
        for (const auto& a : dirs) {
            lp.A.push_back(a);
            lp.b.push_back(1.0);
            lp.rel.push_back(Rel::le);
        }
        const LpSolution sol = lp_solve(lp, cfg);
        if (sol.status != LpStatus::optimal)
            throw SolverError("cubed-check", "transform linear program did not reach an optimum");
        return sol.value;
    };

    CubedReport rep;
    const SimplexMaxOptions opt = beval_options(mid, std::min(tol, 1e-3), cfg);
    for (const auto& s : samples) {
        check_transform_point(f, s);
        const double top = beval(mid, s, opt).value;
        const double base = ghat(s);
        const double d = std::abs(top - base) / base;
        rep.deviations.push_back(d);
        rep.max_deviation = std::max(rep.max_deviation, d);
    }
    return rep;
}

bool norm_fixed_point_check(const FunctionHandle& f, const std::vector<std::vector<double>>& samples,
                            double tol, const NumericConfig& cfg) {
    if (samples.empty()) throw std::invalid_argument("fixed point check needs at least one sample");
    bool fixed = true, euclidean = true;
    for (const auto& s : samples) {
        check_transform_point(f, s);
        const double fv = f.eval(s);
        if (!std::isfinite(fv) || fv <= 0.0)
            throw SolverError("fixed-point", "handle is not positive at sample " + fmt_point(s));
        const double bv = beval(f, s, tol / 4.0, cfg).value;
        const double l2 = std::sqrt(dot(s, s));
        if (std::abs(bv - fv) > tol * fv) fixed = false;
        if (std::abs(fv - l2) > tol * l2) euclidean = false;
    }
    if (fixed != euclidean)
        throw std::logic_error("self-fixed transform disagrees with the Euclidean norm comparison");
    return fixed;
}

FunctionHandle make_norm_handle(int dim, double pnorm) {
    if (dim < 1) throw std::invalid_argument("norm handle needs positive dimension");
    const bool isinf = std::isinf(pnorm) && pnorm > 0.0;
    if (!isinf && (!std::isfinite(pnorm) || pnorm < 1.0))
        throw std::invalid_argument("norm exponent must be >= 1 or infinity");
    FunctionHandle h;
    h.dim = dim;
    if (isinf) {
        h.name = "norm-inf";
        h.eval = [](const std::vector<double>& q) {
            double m = 0.0;
            for (double v : q) m = std::max(m, std::abs(v));
            return m;
        };
    } else if (pnorm == 1.0) {
        h.name = "norm-1";
        h.eval = [](const std::vector<double>& q) {
            double s = 0.0;
            for (double v : q) s += std::abs(v);
            return s;
        };
    } else if (pnorm == 2.0) {
        h.name = "norm-2";
        h.eval = [](const std::vector<double>& q) {
            double s = 0.0;
            for (double v : q) s += v * v;
            return std::sqrt(s);
        };
    } else {
        char buf[32];
        std::snprintf(buf, sizeof buf, "norm-%g", pnorm);
        h.name = buf;
        h.eval = [pnorm](const std::vector<double>& q) {
            double s = 0.0;
            for (double v : q) s += std::pow(std::abs(v), pnorm);
            return std::pow(s, 1.0 / pnorm);
        };
    }
    h.declared_convex = true;
    h.declared_monotone = true;
    const double ex = isinf ? 0.0 : 1.0 / pnorm;
    if (isinf || pnorm >= 2.0) {
        h.c1 = std::pow(dim, ex - 0.5);
        h.c2 = 1.0;
    } else {
        h.c1 = 1.0;
        h.c2 = std::pow(dim, ex - 0.5);
    }
    audit_handle(h);
    return h;
}

FunctionHandle make_linear_handle(const std::vector<double>& a) {
    if (a.empty()) throw std::invalid_argument("linear handle needs coefficients");
    for (double v : a) {
        if (!std::isfinite(v)) throw std::invalid_argument("linear coefficients must be finite");
    }
    FunctionHandle h;
    h.dim = static_cast<int>(a.size());
    h.name = "linear";
    h.eval = [a](const std::vector<double>& q) { return dot(a, q); };
    h.declared_convex = true;
    h.declared_monotone = true;
    const double mn = *std::min_element(a.begin(), a.end());
    h.c1 = std::max(0.0, mn);
    h.c2 = std::sqrt(dot(a, a));
    audit_handle(h);
    return h;
}

FunctionHandle make_max_linear_handle(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) throw std::invalid_argument("max-linear handle needs rows");
    const size_t n = rows.front().size();
    if (n == 0) throw std::invalid_argument("max-linear handle needs nonempty rows");
    double c1 = 0.0, c2 = 0.0;
    for (const auto& r : rows) {
        if (r.size() != n) throw std::invalid_argument("max-linear rows must have equal length");
        for (double v : r) {
            if (!std::isfinite(v)) throw std::invalid_argument("max-linear coefficients must be finite");
        }
        c1 = std::max(c1, *std::min_element(r.begin(), r.end()));
        c2 = std::max(c2, std::sqrt(dot(r, r)));
    }
    FunctionHandle h;
    h.dim = static_cast<int>(n);
    h.name = "max-linear";
    h.eval = [rows](const std::vector<double>& q) {
        double best = -std::numeric_limits<double>::infinity();
        for (const auto& r : rows) best = std::max(best, dot(r, q));
        return best;
    };
    h.declared_convex = true;
    h.declared_monotone = true;
    h.c1 = c1;
    h.c2 = c2;
    audit_handle(h);
    return h;
}

namespace {

FunctionHandle graph_handle(const Graph& g, std::string name,
                            std::function<double(const std::vector<double>&)> raw, bool convex) {
    FunctionHandle h;
    h.dim = g.order();
    h.name = std::move(name);
    h.eval = homogenize(std::move(raw));
    h.declared_convex = convex;
    h.declared_monotone = true;
    h.c1 = 1.0 / std::sqrt(static_cast<double>(g.order()));
    h.c2 = std::sqrt(static_cast<double>(g.order()));
    audit_handle(h);
    return h;
}

} // namespace

FunctionHandle make_alpha_handle(const Graph& g) {
    return graph_handle(
        g, "graph-alpha", [g](const std::vector<double>& u) { return alpha(g, u).value; }, true);
}

FunctionHandle make_alpha_star_handle(const Graph& g, const NumericConfig& cfg) {
    return graph_handle(
        g, "graph-alpha-star", [g, cfg](const std::vector<double>& u) { return alpha_star(g, u, cfg).value; },
        true);
}

FunctionHandle make_theta_handle(const Graph& g, const NumericConfig& cfg) {
    return graph_handle(
        g, "graph-theta", [g, cfg](const std::vector<double>& u) { return lovasz_theta(g, u, cfg).value; },
        true);
}

FunctionHandle make_capacity_level_handle(const Graph& g, int kmax, const NumericConfig& cfg) {
    if (kmax < 1) throw std::invalid_argument("capacity level must be >= 1");
    // level 1 is the independence number, hence convex; higher levels carry
    // no convexity guarantee and get the full multistart treatment
    return graph_handle(
        g, "capacity-level-" + std::to_string(kmax),
        [g, kmax, cfg](const std::vector<double>& u) {
            double best = 0.0;
            for (int k = 1; k <= kmax; k++) best = std::max(best, capacity_lower_bound(g, u, k, cfg));
            return best;
        },
        kmax == 1);
}

FunctionHandle scale_handle(const FunctionHandle& f, double s) {
    if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("scale must be positive and finite");
    FunctionHandle h = f;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g*", s);
    h.name = buf + f.name;
    h.eval = [base = f.eval, s](const std::vector<double>& q) { return s * base(q); };
    h.c1 = f.c1 * s;
    h.c2 = f.c2 * s;
    audit_handle(h);
    return h;
}

namespace {

// Tabulated values on the simplex lattice, interpolated over the staircase
// triangulation expressed in cumulative coordinates; every cell vertex is
// then a valid lattice point and the interpolant is continuous and piecewise
// linear on the simplex.
struct CustomTable {
    int n = 0;
    int res = 0; // lattice steps per edge, grid - 1
    std::map<std::vector<int>, double> value;

    double at(std::vector<int> w) const {
        std::vector<int> comp(n);
        int prev = 0;
        for (int i = 0; i + 1 < n; i++) {
            comp[i] = w[i] - prev;
            prev = w[i];
        }
        comp[n - 1] = res - prev;
        const auto it = value.find(comp);
        if (it == value.end()) throw SolverError("custom-handle", "interpolation left the value lattice");
        return it->second;
    }

    double interp(const std::vector<double>& u) const {
        if (n == 1) return value.begin()->second;
        const int m = n - 1;
        std::vector<double> t(m);
        std::vector<int> base(m);
        std::vector<double> frac(m);
        double run = 0.0;
        for (int i = 0; i < m; i++) {
            run += u[i];
            t[i] = std::min(std::max(run * res, 0.0), static_cast<double>(res));
            base[i] = std::min(static_cast<int>(std::floor(t[i])), res);
            frac[i] = t[i] - base[i];
        }
        std::vector<int> ord(m);
        std::iota(ord.begin(), ord.end(), 0);
        // descending fraction, ties broken toward the later coordinate so
        // cell vertices keep the cumulative coordinates nondecreasing
        std::sort(ord.begin(), ord.end(), [&](int a, int b) {
            if (frac[a] != frac[b]) return frac[a] > frac[b];
            return a > b;
        });
        double out = 0.0;
        std::vector<int> w = base;
        const double lead = 1.0 - frac[ord[0]];
        if (lead > 1e-14) out += lead * at(w);
        for (int j = 0; j < m; j++) {
            w[ord[j]] += 1;
            const double lam = frac[ord[j]] - (j + 1 < m ? frac[ord[j + 1]] : 0.0);
            if (lam > 1e-14) out += lam * at(w);
        }
        return out;
    }
};

} // namespace

FunctionHandle make_custom_handle(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, std::string("custom handle: ") + e.what());
    }
    if (!j.is_object()) throw ParseError(0, "custom handle: top level must be an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError(0, "custom handle: field \"n\" must be an integer");
    if (!j.contains("grid") || !j["grid"].is_number_integer())
        throw ParseError(0, "custom handle: field \"grid\" must be an integer");
    if (!j.contains("values") || !j["values"].is_array())
        throw ParseError(0, "custom handle: field \"values\" must be an array");
    const int n = j["n"].get<int>();
    const int grid = j["grid"].get<int>();
    if (n < 1 || n > 16) throw ParseError(0, "custom handle: n must be between 1 and 16");
    if (grid < 2) throw ParseError(0, "custom handle: grid must be at least 2");

    auto table = std::make_shared<CustomTable>();
    table->n = n;
    table->res = grid - 1;
    double count = 1.0;
    for (int i = 1; i < n; i++) count *= static_cast<double>(table->res + i) / i;
    const long long expected = llround(count);
    if (expected > 300000) throw ParseError(0, "custom handle: grid is too large");
    if (static_cast<long long>(j["values"].size()) != expected)
        throw ParseError(0, "custom handle: expected " + std::to_string(expected) + " values, got " +
                                std::to_string(j["values"].size()));

    std::vector<double> vals;
    vals.reserve(j["values"].size());
    for (const auto& v : j["values"]) {
        if (!v.is_number()) throw ParseError(0, "custom handle: values must be numbers");
        vals.push_back(v.get<double>());
    }
    for (size_t i = 0; i < vals.size(); i++) {
        if (!std::isfinite(vals[i]))
            throw AuditError("finite",
                             "grid value at index " + std::to_string(i) + " is " + std::to_string(vals[i]));
        if (vals[i] <= 0.0)
            throw AuditError("nondegenerate",
                             "grid value at index " + std::to_string(i) + " is " + std::to_string(vals[i]));
    }

    // lattice points in ascending lexicographic order, matching the values list
    {
        size_t next = 0;
        std::vector<int> comp(n);
        const std::function<void(int, int)> emit = [&](int idx, int left) {
            if (idx == n - 1) {
                comp[idx] = left;
                table->value.emplace(comp, vals[next++]);
                return;
            }
            for (int v = 0; v <= left; v++) {
                comp[idx] = v;
                emit(idx + 1, left - v);
            }
        };
        emit(0, table->res);
    }

    FunctionHandle h;
    h.dim = n;
    h.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
    h.eval = homogenize([table](const std::vector<double>& u) { return table->interp(u); });
    h.declared_convex = j.value("convex", false);
    h.declared_monotone = j.value("monotone", false);
    h.c1 = j.value("c1", 0.0);
    h.c2 = j.value("c2", 0.0);
    if (h.c1 < 0.0 || h.c2 < 0.0 || (h.c1 > 0.0) != (h.c2 > 0.0) || h.c1 > h.c2)
        throw ParseError(0, "custom handle: c1 and c2 must satisfy 0 < c1 <= c2");
    audit_handle(h);
    return h;
}

} // namespace gdw

#include "gdw/simplex_opt.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gdw/errors.hpp"
#include "gdw/numeric.hpp"

namespace gdw {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Bookkeeping around the raw objective: counts calls, sanitizes NaN, and
// remembers the best on-simplex point seen. Off-simplex probes (finite
// difference shifts) go through probe() and never become candidates.
struct Tracker {
    const std::function<double(const std::vector<double>&)>& f;
    long long evals = 0;
    double best = kNegInf;
    std::vector<double> bestq{};

    double probe(const std::vector<double>& q) {
        evals++;
        const double v = f(q);
        return std::isnan(v) ? kNegInf : v;
    }
    double candidate(const std::vector<double>& q) {
        const double v = probe(q);
        if (v > best) {
            best = v;
            bestq = q;
        }
        return v;
    }
};

// Gradient ascent with projection and an adaptive step that carries over
// between iterations. q and qval stay in sync (qval = f(q)).
void pg_ascend(Tracker& tk, std::vector<double>& q, double& qval, int iters, double h, double step0,
               double min_step) {
    const int n = static_cast<int>(q.size());
    double step = step0;
    std::vector<double> g(n), trial;
    for (int it = 0; it < iters && step >= min_step; it++) {
        for (int i = 0; i < n; i++) {
            std::vector<double> qp = q;
            if (q[i] >= h) {
                qp[i] = q[i] + h;
                const double fp = tk.probe(qp);
                qp[i] = q[i] - h;
                const double fm = tk.probe(qp);
                g[i] = (fp - fm) / (2.0 * h);
            } else {
                qp[i] = q[i] + h;
                g[i] = (tk.probe(qp) - qval) / h;
            }
        }
        double gn = 0.0;
        for (double x : g) gn = std::max(gn, std::abs(x));
        if (!(gn > 0.0) || !std::isfinite(gn)) break;
        bool moved = false;
        while (step >= min_step) {
            trial = q;
            for (int i = 0; i < n; i++) trial[i] += step * g[i] / gn;
            trial = project_to_simplex(trial);
            const double tv = tk.candidate(trial);
            if (tv > qval) {
                q = trial;
                qval = tv;
                step = std::min(1.0, step * 1.6);
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
}

// One golden-section pass over every coordinate pair, moving mass along
// e_i - e_j. Stays on the simplex exactly, so every point is a candidate.
// The sweep advances a local point rather than the tracker best: that lets
// a caller polish inside a face whose value starts below the global best,
// with the tracker picking the result up only once it actually wins.
std::vector<double> pairwise_polish(Tracker& tk, std::vector<double> q, double tol) {
    const int n = static_cast<int>(q.size());
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double qv = tk.candidate(q);
    for (int i = 0; i < n; i++) {
        for (int j = i + 1; j < n; j++) {
            double a = -q[i], b = q[j];
            if (b - a < 16.0 * tol) continue;
            const auto at = [&](double t) {
                std::vector<double> p = q;
                p[i] = std::max(0.0, q[i] + t);
                p[j] = std::max(0.0, q[j] - t);
                return p;
            };
            double tb = 0.0, vb = qv;
            const auto look = [&](double t) {
                const double v = tk.candidate(at(t));
                if (v > vb) {
                    vb = v;
                    tb = t;
                }
                return v;
            };
            look(a);
            look(b);
            double c = b - gr * (b - a), d = a + gr * (b - a);
            double fc = look(c), fd = look(d);
            for (int it = 0; it < 90 && (b - a) > tol; it++) {
                if (fc >= fd) {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - gr * (b - a);
                    fc = look(c);
                } else {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + gr * (b - a);
                    fd = look(d);
                }
            }
            if (vb > qv) {
                q = at(tb);
                qv = vb;
            }
        }
    }
    return q;
}

// Golden-section searches along segments from the point toward a few fixed
// anchors: the barycenter of its own support, the full barycenter, and each
// vertex. Max-type denominators peak where the active coordinates tie, and
// the support barycenter move equalizes them all at once, which no sequence
// of individually improving pair transfers can do.
std::vector<double> radial_polish(Tracker& tk, std::vector<double> q, double tol) {
    const int n = static_cast<int>(q.size());
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double qv = tk.candidate(q);

    std::vector<std::vector<double>> anchors;
    {
        int support = 0;
        for (double v : q)
            if (v > 0.0) support++;
        if (support >= 2) {
            std::vector<double> sb(n, 0.0);
            for (int i = 0; i < n; i++)
                if (q[i] > 0.0) sb[i] = 1.0 / support;
            anchors.push_back(std::move(sb));
        }
    }
    anchors.emplace_back(n, 1.0 / n);
    for (int i = 0; i < n; i++) {
        std::vector<double> e(n, 0.0);
        e[i] = 1.0;
        anchors.push_back(std::move(e));
    }

    for (const auto& anchor : anchors) {
        double dist = 0.0;
        for (int i = 0; i < n; i++) dist = std::max(dist, std::abs(anchor[i] - q[i]));
        if (dist < 16.0 * tol) continue;
        const auto at = [&](double t) {
            std::vector<double> p(n);
            for (int i = 0; i < n; i++) p[i] = (1.0 - t) * q[i] + t * anchor[i];
            return p;
        };
        double tb = 0.0, vb = qv;
        const auto look = [&](double t) {
            const double v = tk.candidate(at(t));
            if (v > vb) {
                vb = v;
                tb = t;
            }
            return v;
        };
        look(1.0);
        double a = 0.0, b = 1.0;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = look(c), fd = look(d);
        for (int it = 0; it < 70 && (b - a) > tol; it++) {
            if (fc >= fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - gr * (b - a);
                fc = look(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + gr * (b - a);
                fd = look(d);
            }
        }
        if (vb > qv) {
            q = at(tb);
            qv = vb;
        }
    }
    return q;
}

} // namespace

std::vector<double> project_to_simplex(std::vector<double> v) {
    const int n = static_cast<int>(v.size());
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double tau = 0.0, run = 0.0;
    for (int j = 0; j < n; j++) {
        run += u[j];
        const double t = (run - 1.0) / (j + 1);
        if (u[j] - t > 0.0) tau = t;
    }
    double sum = 0.0;
    for (double& x : v) {
        x = std::max(x - tau, 0.0);
        sum += x;
    }
    if (!(sum > 0.0)) {
        std::fill(v.begin(), v.end(), 1.0 / n);
        return v;
    }
    for (double& x : v) x /= sum;
    return v;
}

SimplexMaxResult simplex_maximize(int n, const std::function<double(const std::vector<double>&)>& f,
                                  const SimplexMaxOptions& opt) {
    if (n < 1) throw std::invalid_argument("simplex_maximize: dimension must be positive");
    Tracker tk{f};
    SimplexMaxResult res;
    if (n == 1) {
        tk.candidate({1.0});
        res.value = tk.best;
        res.argmax = tk.bestq;
        res.evaluations = tk.evals;
        res.starts = 1;
        res.start_spread = 0.0;
        if (res.value == kNegInf) throw SolverError("simplex-opt", "objective is NaN at the only point");
        return res;
    }

    std::vector<std::vector<double>> starts;
    if (opt.default_starts) {
        for (int i = 0; i < n; i++) {
            std::vector<double> e(n, 0.0);
            e[i] = 1.0;
            starts.push_back(std::move(e));
        }
        starts.emplace_back(n, 1.0 / n);
        SplitMix64 rng(opt.seed);
        for (int r = 0; r < opt.random_starts; r++) {
            std::vector<double> q(n);
            double s = 0.0;
            for (int i = 0; i < n; i++) {
                q[i] = -std::log(rng.uniform());
                s += q[i];
            }
            for (int i = 0; i < n; i++) q[i] /= s;
            starts.push_back(std::move(q));
        }
    }
    for (const auto& e : opt.extra_starts) {
        if (static_cast<int>(e.size()) == n) starts.push_back(project_to_simplex(e));
    }
    if (starts.empty()) starts.emplace_back(n, 1.0 / n);

    double best_coarse = kNegInf, worst_coarse = std::numeric_limits<double>::infinity();
    int best_idx = 0;
    for (int idx = 0; idx < static_cast<int>(starts.size()); idx++) {
        std::vector<double> q = starts[idx];
        double qval = tk.candidate(q);
        if (qval == kNegInf) continue;
        pg_ascend(tk, q, qval, opt.coarse_iters, opt.grad_h, 0.25, std::max(opt.min_step, 1e-10));
        if (qval > best_coarse) {
            best_coarse = qval;
            best_idx = idx;
        }
        worst_coarse = std::min(worst_coarse, qval);
    }
    if (tk.best == kNegInf) throw SolverError("simplex-opt", "objective was NaN at every start");

    std::vector<double> q = tk.bestq;
    double qval = tk.best;
    pg_ascend(tk, q, qval, opt.refine_iters, opt.grad_h, 0.1, opt.min_step);

    // The gradient phase stalls on two shapes the polish rounds repair:
    // optima on a face it only nears (snap trailing coordinates to zero and
    // re-polish inside the face, accepting a dip the polish then recovers),
    // and kinks of max-type denominators where only a coordinated move of
    // all tied coordinates helps (radial equalization). Rounds repeat while
    // anything improves.
    for (int round = 0; round < 3 && opt.pairwise_sweeps > 0; round++) {
        const double round_before = tk.best;
        for (int s = 0; s < opt.pairwise_sweeps; s++) {
            const double before = tk.best;
            pairwise_polish(tk, tk.bestq, opt.pairwise_tol);
            if (!(tk.best > before)) break;
        }
        if (n >= 3) {
            for (const double tau : {0.2, 0.05, 0.01}) {
                const std::vector<double> base = tk.bestq;
                double mx = 0.0;
                for (double v : base) mx = std::max(mx, v);
                std::vector<double> snapped = base;
                int zeroed = 0, kept = 0;
                double sum = 0.0;
                for (double& v : snapped) {
                    if (v < tau * mx) {
                        if (v > 0.0) zeroed++;
                        v = 0.0;
                    } else {
                        kept++;
                        sum += v;
                    }
                }
                if (zeroed == 0 || kept < 2 || !(sum > 0.0)) continue;
                for (double& v : snapped) v /= sum;
                const double before = tk.best;
                pairwise_polish(tk, std::move(snapped), opt.pairwise_tol);
                if (tk.best > before) pairwise_polish(tk, tk.bestq, opt.pairwise_tol);
            }
        }
        radial_polish(tk, tk.bestq, opt.pairwise_tol);
        if (!(tk.best > round_before)) break;
    }

    res.value = tk.best;
    res.argmax = tk.bestq;
    res.evaluations = tk.evals;
    res.starts = static_cast<int>(starts.size());
    res.best_start = best_idx;
    res.start_spread = (best_coarse > kNegInf && worst_coarse < best_coarse) ? best_coarse - worst_coarse : 0.0;
    return res;
}

} // namespace gdw

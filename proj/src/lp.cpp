#include "gdw/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gdw/errors.hpp"

// Two-phase dense tableau simplex. Phase 1 maximizes -(sum of artificials)
// from a slack/artificial basis; phase 2 maximizes the user objective with
// artificial columns blocked. Bland's rule throughout: entering column is the
// lowest admissible index, leaving row breaks ratio ties by lowest basis
// index. Both reduced-cost rows are carried through every pivot so the duals
// can be read off the slack columns at the end.

namespace gdw {

namespace {

struct Tableau {
    int m, n;                 // rows, structural columns
    int ncols;                // structural + slack/surplus + artificial
    std::vector<std::vector<double>> T; // m x (ncols + 1), last column is rhs
    std::vector<int> basis;             // column basic in each row
    std::vector<double> d1, d2;         // reduced costs, phase 1 and 2
    std::vector<char> artificial;       // per column
    std::vector<int> rowcol;            // per row: its slack/surplus/artificial column
};

void pivot(Tableau& t, int r, int j, double eps) {
    auto& row = t.T[r];
    double piv = row[j];
    for (double& v : row) v /= piv;
    row[j] = 1.0;
    for (int i = 0; i < t.m; ++i) {
        if (i == r) continue;
        double f = t.T[i][j];
        if (std::abs(f) <= eps * 1e-3) continue;
        auto& ri = t.T[i];
        for (int k = 0; k <= t.ncols; ++k) ri[k] -= f * row[k];
        ri[j] = 0.0;
    }
    for (auto* d : {&t.d1, &t.d2}) {
        double f = (*d)[j];
        if (std::abs(f) > 0) {
            for (int k = 0; k <= t.ncols; ++k) (*d)[k] -= f * row[k];
            (*d)[j] = 0.0;
        }
    }
    t.basis[r] = j;
}

// Bland iteration for one phase. allowed(j) filters entering columns.
// Returns optimal or unbounded.
template <class Allowed>
LpStatus run_phase(Tableau& t, std::vector<double>& d, Allowed allowed, double eps,
                   long long& iter_left) {
    for (;;) {
        if (--iter_left < 0) throw SolverError("lp", "iteration limit exceeded");
        int enter = -1;
        for (int j = 0; j < t.ncols; ++j) {
            if (!allowed(j)) continue;
            if (d[j] > eps) {
                enter = j;
                break;
            }
        }
        if (enter < 0) return LpStatus::optimal;
        // Entries a shade above eps are usually elimination residue, and a
        // pivot divides the whole row by them, amplifying that noise by 1/a.
        // So candidate pivots must also clear a threshold relative to the
        // column's largest entry; if nothing does, the column really is that
        // small and the scan falls back to the bare eps cutoff. The rhs is
        // clamped at zero because feasible-basis roundoff can leave it a hair
        // negative, and a negative ratio would beat every honest one.
        double colmax = 0.0;
        for (int i = 0; i < t.m; ++i) colmax = std::max(colmax, std::abs(t.T[i][enter]));
        const double strong = std::max(eps, 1e-7 * colmax);
        int leave = -1;
        double best = 0.0;
        for (double athresh : {strong, eps}) {
            for (int i = 0; i < t.m; ++i) {
                double a = t.T[i][enter];
                if (a <= athresh) continue;
                double ratio = std::max(t.T[i][t.ncols], 0.0) / a;
                if (leave < 0 || ratio < best - eps ||
                    (ratio < best + eps && t.basis[i] < t.basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave >= 0) break;
        }
        if (leave < 0) return LpStatus::unbounded;
        pivot(t, leave, enter, eps);
    }
}

} // namespace

LpSolution lp_solve(const LpProblem& prob, const NumericConfig& cfg) {
    const int m = int(prob.A.size());
    const int n = int(prob.c.size());
    if (int(prob.b.size()) != m || int(prob.rel.size()) != m)
        throw std::invalid_argument("lp_solve: row count mismatch");
    for (const auto& row : prob.A)
        if (int(row.size()) != n) throw std::invalid_argument("lp_solve: column count mismatch");

    const double eps = cfg.lp_pivot_eps;
    const bool maximize = prob.sense == Sense::maximize;

    // Work in max form on rows normalized to b >= 0.
    std::vector<double> cm(n);
    for (int j = 0; j < n; ++j) cm[j] = maximize ? prob.c[j] : -prob.c[j];
    std::vector<std::vector<double>> A = prob.A;
    std::vector<double> b = prob.b;
    std::vector<Rel> rel = prob.rel;
    std::vector<int> rowsign(m, 1);
    for (int i = 0; i < m; ++i) {
        if (b[i] < 0) {
            rowsign[i] = -1;
            b[i] = -b[i];
            for (auto& v : A[i]) v = -v;
            rel[i] = rel[i] == Rel::le ? Rel::ge : rel[i] == Rel::ge ? Rel::le : Rel::eq;
        }
    }

    Tableau t;
    t.m = m;
    t.n = n;
    int nextcol = n;
    std::vector<int> slackcol(m, -1), artcol(m, -1);
    for (int i = 0; i < m; ++i) {
        if (rel[i] != Rel::eq) slackcol[i] = nextcol++;
        if (rel[i] != Rel::le) artcol[i] = nextcol++;
    }
    t.ncols = nextcol;
    t.artificial.assign(t.ncols, 0);
    t.T.assign(m, std::vector<double>(t.ncols + 1, 0.0));
    t.basis.assign(m, -1);
    t.rowcol.assign(m, -1);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) t.T[i][j] = A[i][j];
        t.T[i][t.ncols] = b[i];
        if (slackcol[i] >= 0) {
            t.T[i][slackcol[i]] = rel[i] == Rel::le ? 1.0 : -1.0;
            t.rowcol[i] = slackcol[i];
        }
        if (artcol[i] >= 0) {
            t.T[i][artcol[i]] = 1.0;
            t.artificial[artcol[i]] = 1;
            if (t.rowcol[i] < 0) t.rowcol[i] = artcol[i];
        }
        t.basis[i] = artcol[i] >= 0 ? artcol[i] : slackcol[i];
    }

    // Phase-1 reduced costs for objective  max -(sum of artificials):
    // d1_j = c1_j + sum over artificial-basic rows of T_ij.
    t.d1.assign(t.ncols + 1, 0.0);
    for (int j = 0; j < t.ncols; ++j) {
        double v = t.artificial[j] ? -1.0 : 0.0;
        for (int i = 0; i < m; ++i)
            if (artcol[i] >= 0 && t.basis[i] == artcol[i]) v += t.T[i][j];
        t.d1[j] = t.artificial[j] ? 0.0 : v;
    }
    // Phase-2 reduced costs: basis costs are all zero initially.
    t.d2.assign(t.ncols + 1, 0.0);
    for (int j = 0; j < n; ++j) t.d2[j] = cm[j];

    long long iter_left = cfg.lp_max_iter;
    LpSolution sol;

    bool need_phase1 = std::any_of(artcol.begin(), artcol.end(), [](int c) { return c >= 0; });
    if (need_phase1) {
        LpStatus st = run_phase(t, t.d1, [](int) { return true; }, eps, iter_left);
        (void)st; // phase-1 objective is bounded above by 0
        double infeas = 0.0;
        for (int i = 0; i < m; ++i)
            if (t.artificial[t.basis[i]]) infeas += t.T[i][t.ncols];
        if (infeas > cfg.lp_feas_tol * (1.0 + *std::max_element(b.begin(), b.end()))) {
            sol.status = LpStatus::infeasible;
            return sol;
        }
        // Drive artificials out of the basis where possible, pivoting on the
        // largest available entry so noise-level leftovers are never divisors.
        for (int i = 0; i < m; ++i) {
            if (!t.artificial[t.basis[i]]) continue;
            int jbest = -1;
            double abest = std::max(eps, 1e-7);
            for (int j = 0; j < t.ncols; ++j) {
                if (t.artificial[j]) continue;
                if (std::abs(t.T[i][j]) > abest) {
                    jbest = j;
                    abest = std::abs(t.T[i][j]);
                }
            }
            if (jbest >= 0) pivot(t, i, jbest, eps);
            // otherwise the row is redundant; its artificial stays basic at zero
        }
    }

    LpStatus st = run_phase(t, t.d2, [&](int j) { return !t.artificial[j]; }, eps, iter_left);
    if (st == LpStatus::unbounded) {
        sol.status = LpStatus::unbounded;
        return sol;
    }

    sol.status = LpStatus::optimal;
    sol.x.assign(n, 0.0);
    for (int i = 0; i < m; ++i)
        if (t.basis[i] < n) sol.x[t.basis[i]] = t.T[i][t.ncols];
    double val = 0.0;
    for (int j = 0; j < n; ++j) val += cm[j] * sol.x[j];
    sol.value = maximize ? val : -val;

    // Duals from the final reduced costs of each row's slack-family column:
    //   le row, slack +1:      d2 = -y   ->  y = -d2
    //   ge row, surplus -1:    d2 = +y   ->  y =  d2
    //   eq row, artificial +1: d2 = -y   ->  y = -d2
    sol.y.assign(m, 0.0);
    for (int i = 0; i < m; ++i) {
        double yi;
        if (rel[i] == Rel::ge)
            yi = t.d2[slackcol[i]];
        else if (rel[i] == Rel::le)
            yi = -t.d2[slackcol[i]];
        else
            yi = -t.d2[artcol[i]];
        yi *= rowsign[i];        // undo row negation
        if (!maximize) yi = -yi; // duals of max(-c) formulation
        sol.y[i] = yi;
    }

    // Residual bookkeeping against the original data.
    double viol = 0.0, by = 0.0;
    for (int i = 0; i < m; ++i) {
        double ax = 0.0;
        for (int j = 0; j < n; ++j) ax += prob.A[i][j] * sol.x[j];
        double r = ax - prob.b[i];
        switch (prob.rel[i]) {
            case Rel::le: viol = std::max(viol, r); break;
            case Rel::ge: viol = std::max(viol, -r); break;
            case Rel::eq: viol = std::max(viol, std::abs(r)); break;
        }
        by += prob.b[i] * sol.y[i];
    }
    for (int j = 0; j < n; ++j) viol = std::max(viol, -sol.x[j]);
    sol.max_violation = viol;
    sol.duality_gap = std::abs(sol.value - by);
    return sol;
}

} // namespace gdw

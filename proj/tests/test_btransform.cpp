#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "gdw/btransform.hpp"
#include "gdw/errors.hpp"
#include "gdw/graph.hpp"
#include "gdw/invariants.hpp"
#include "gdw/numeric.hpp"

using namespace gdw;

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (size_t i = 0; i < a.size(); i++) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> simplex_point(SplitMix64& rng, int n) {
    std::vector<double> q(n);
    double s = 0.0;
    for (double& v : q) {
        v = -std::log(1.0 - rng.uniform());
        s += v;
    }
    for (double& v : q) v /= s;
    return q;
}

std::vector<std::vector<double>> simplex_points(std::uint64_t seed, int n, int count) {
    SplitMix64 rng(seed);
    std::vector<std::vector<double>> out;
    for (int i = 0; i < count; i++) out.push_back(simplex_point(rng, n));
    return out;
}

// concave square root sum squared, the standard example of a handle strictly
// above its own double transform
FunctionHandle sqrt_sum_handle() {
    FunctionHandle h;
    h.dim = 2;
    h.name = "sqrt-sum-squared";
    h.eval = [](const std::vector<double>& q) {
        const double s = std::sqrt(q[0]) + std::sqrt(q[1]);
        return s * s;
    };
    h.declared_convex = false;
    h.declared_monotone = true;
    h.c1 = 1.0;
    h.c2 = 2.0 * std::sqrt(2.0);
    audit_handle(h);
    return h;
}

// convex combination of two audited handles on the same dimension
FunctionHandle mix_handles(const FunctionHandle& a, const FunctionHandle& b, double t) {
    FunctionHandle h;
    h.dim = a.dim;
    h.name = "mix";
    h.eval = [ea = a.eval, eb = b.eval, t](const std::vector<double>& q) {
        return t * ea(q) + (1.0 - t) * eb(q);
    };
    h.declared_convex = a.declared_convex && b.declared_convex;
    h.declared_monotone = a.declared_monotone && b.declared_monotone;
    h.c1 = t * a.c1 + (1.0 - t) * b.c1;
    h.c2 = t * a.c2 + (1.0 - t) * b.c2;
    audit_handle(h);
    return h;
}

// exhaustive one dimensional oracle for the double transform when n = 2: the
// simplex is a segment, both layers are grid maxima over it
double brute_bsquare_dim2(const FunctionHandle& f, const std::vector<double>& p, int res) {
    std::vector<std::vector<double>> grid;
    std::vector<double> fv;
    for (int i = 0; i <= res; i++) {
        const double t = double(i) / res;
        grid.push_back({t, 1.0 - t});
        fv.push_back(f.eval(grid.back()));
    }
    std::vector<double> g(grid.size(), 0.0);
    for (size_t a = 0; a < grid.size(); a++)
        for (size_t b = 0; b < grid.size(); b++)
            if (fv[b] > 0.0) g[a] = std::max(g[a], dot(grid[a], grid[b]) / fv[b]);
    double out = 0.0;
    for (size_t a = 0; a < grid.size(); a++)
        if (g[a] > 0.0) out = std::max(out, dot(p, grid[a]) / g[a]);
    return out;
}

Graph random_graph(SplitMix64& rng, int n, double edge_prob = 0.5) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            if (rng.uniform() < edge_prob) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

} // namespace

TEST_CASE("transform of the Euclidean norm at hand points") {
    const auto l2 = make_norm_handle(2, 2.0);
    CHECK(beval(l2, {3.0, 4.0}).value == doctest::Approx(5.0).epsilon(1e-6));
    CHECK(beval(l2, {1.0, 2.0}).value == doctest::Approx(std::sqrt(5.0)).epsilon(1e-6));
    CHECK(beval(l2, {1.0, 0.0}).value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(beval(make_norm_handle(3, 2.0), {2.0, 3.0, 6.0}).value == doctest::Approx(7.0).epsilon(1e-6));
}

TEST_CASE("transform of linear handles picks the best coordinate ratio") {
    const auto h = make_linear_handle({1.0, 2.0});
    CHECK(beval(h, {1.0, 1.0}).value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(beval(h, {2.0, 3.0}).value == doctest::Approx(2.0).epsilon(1e-6));
    CHECK(beval(h, {0.0, 1.0}).value == doctest::Approx(0.5).epsilon(1e-6));
    const auto h3 = make_linear_handle({2.0, 1.0, 4.0});
    SplitMix64 rng(21);
    for (int t = 0; t < 8; t++) {
        const auto p = simplex_point(rng, 3);
        const double want = std::max({p[0] / 2.0, p[1] / 1.0, p[2] / 4.0});
        CHECK(beval(h3, p).value == doctest::Approx(want).epsilon(1e-6));
    }
}

TEST_CASE("one norm and max norm transform into each other") {
    const auto l1 = make_norm_handle(3, 1.0);
    const auto linf = make_norm_handle(3, INFINITY);
    SplitMix64 rng(22);
    for (int t = 0; t < 8; t++) {
        std::vector<double> p(3);
        for (double& v : p) v = rng.uniform(0.0, 2.0);
        const double mx = std::max({p[0], p[1], p[2]});
        const double sm = p[0] + p[1] + p[2];
        CHECK(beval(l1, p).value == doctest::Approx(mx).epsilon(1e-6));
        CHECK(beval(linf, p).value == doctest::Approx(sm).epsilon(1e-6));
    }
}

TEST_CASE("transform of graph invariants matches the complement invariant") {
    const Graph c5 = Graph::cycle(5);
    const Graph c5c = complement(c5);
    const std::vector<double> ones(5, 1.0);
    CHECK(beval(make_alpha_handle(c5), ones).value == doctest::Approx(2.5).epsilon(1e-5));

    const std::vector<double> p{2.0, 1.0, 1.0, 1.0, 0.5};
    CHECK(beval(make_alpha_handle(c5c), p, 1e-4).value ==
          doctest::Approx(alpha_star(c5, p).value).epsilon(1e-3));
    CHECK(beval(make_alpha_star_handle(c5c), p, 1e-4).value ==
          doctest::Approx(alpha(c5, p).value).epsilon(1e-3));
    CHECK(beval(make_theta_handle(c5c), p, 1e-3).value ==
          doctest::Approx(lovasz_theta(c5, p).value).epsilon(1e-2));
}

TEST_CASE("transform reports carry their own certificate") {
    SplitMix64 rng(23);
    const auto handles = {make_norm_handle(3, 1.0), make_linear_handle({2.0, 1.0, 4.0}),
                          make_alpha_handle(Graph::cycle(3))};
    for (const auto& h : handles) {
        for (int t = 0; t < 4; t++) {
            const auto p = simplex_point(rng, 3);
            const auto r = beval(h, p, 1e-5);
            REQUIRE(r.q.size() == 3u);
            double qs = 0.0;
            for (double v : r.q) {
                CHECK(v >= -1e-12);
                qs += v;
            }
            CHECK(qs == doctest::Approx(1.0).epsilon(1e-9));
            const double fq = h.eval(r.q);
            REQUIRE(fq > 0.0);
            CHECK(std::abs(r.value - dot(p, r.q) / fq) <= 1e-12 * std::max(1.0, r.value));
            CHECK(r.starts >= 1);
            CHECK(r.evaluations >= 1);
        }
    }
}

TEST_CASE("transform input validation") {
    const auto l2 = make_norm_handle(2, 2.0);
    CHECK_THROWS_AS(beval(l2, {1.0, 2.0, 3.0}), std::invalid_argument);
    CHECK_THROWS_AS(beval(l2, {1.0, -0.25}), std::invalid_argument);
    CHECK_THROWS_AS(beval(l2, {1.0, std::nan("")}), std::invalid_argument);
    const auto zero = beval(l2, {0.0, 0.0});
    CHECK(zero.value == 0.0);
    CHECK_THROWS_AS(bsquare(l2, {1.0, -1.0}), std::invalid_argument);
    CHECK_THROWS_AS(make_norm_handle(2, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(make_norm_handle(0, 2.0), std::invalid_argument);
}

TEST_CASE("double transform fixes the Euclidean norm") {
    const auto l2 = make_norm_handle(2, 2.0);
    CHECK(bsquare(l2, {1.0, 2.0}) == doctest::Approx(std::sqrt(5.0)).epsilon(1e-4));
    CHECK(bsquare(l2, {3.0, 4.0}) == doctest::Approx(5.0).epsilon(1e-4));
    const auto l23 = make_norm_handle(3, 2.0);
    CHECK(bsquare(l23, {1.0, 1.0, 1.0}) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-4));
}

TEST_CASE("double transform flattens the square root sum") {
    const auto f = sqrt_sum_handle();
    const double b2 = bsquare(f, {1.0, 1.0}, 1e-2);
    CHECK(b2 == doctest::Approx(2.0).epsilon(0.025));
    // the drop from f(1,1) = 4 certifies the handle is far from invariant
    CHECK(f.eval({1.0, 1.0}) - b2 >= 1.9);
    // independent dense grid oracle over the one dimensional simplex
    const double want = brute_bsquare_dim2(f, {1.0, 1.0}, 4000);
    CHECK(b2 == doctest::Approx(want).epsilon(1e-2));
    const std::vector<double> p{0.3, 0.7};
    CHECK(bsquare(f, p, 1e-2) == doctest::Approx(brute_bsquare_dim2(f, p, 4000)).epsilon(1e-2));
}

TEST_CASE("double transform keeps graph invariants in place") {
    const Graph c5 = Graph::cycle(5);
    const std::vector<double> ones(5, 1.0);
    CHECK(bsquare(make_alpha_handle(c5), ones, 1e-3) == doctest::Approx(2.0).epsilon(2e-3));
    CHECK(bsquare(make_alpha_star_handle(c5), ones, 1e-3) == doctest::Approx(2.5).epsilon(2e-3));
    CHECK(bsquare(make_theta_handle(c5), ones, 2e-2) == doctest::Approx(std::sqrt(5.0)).epsilon(2e-2));
}

TEST_CASE("scaling a handle inversely scales its transform") {
    const auto l2 = make_norm_handle(2, 2.0);
    const auto doubled = scale_handle(l2, 2.0);
    CHECK(doubled.eval({3.0, 4.0}) == doctest::Approx(10.0).epsilon(1e-12));
    CHECK(beval(doubled, {3.0, 4.0}).value == doctest::Approx(2.5).epsilon(1e-6));
    // the double transform undoes the reciprocal and restores the scale
    CHECK(bsquare(doubled, {3.0, 4.0}, 1e-4) == doctest::Approx(10.0).epsilon(1e-3));
    CHECK_THROWS_AS(scale_handle(l2, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scale_handle(l2, -2.0), std::invalid_argument);
}

TEST_CASE("transform reverses pointwise order") {
    SplitMix64 rng(24);
    struct Pair {
        FunctionHandle lo, hi;
    };
    std::vector<Pair> pairs;
    pairs.push_back({make_norm_handle(3, 2.0), make_norm_handle(3, 1.0)});
    const Graph c5 = Graph::cycle(5);
    pairs.push_back({make_alpha_handle(c5), make_theta_handle(c5)});
    pairs.push_back({make_theta_handle(c5), make_alpha_star_handle(c5)});
    for (const auto& [lo, hi] : pairs) {
        // the two sides may be mathematically equal, so the slack must cover
        // solver noise on either one
        for (int s = 0; s < 64; s++) {
            const auto q = simplex_point(rng, lo.dim);
            CHECK(lo.eval(q) <= hi.eval(q) + 1e-6 * std::max(1.0, hi.eval(q)));
        }
        for (int t = 0; t < 16; t++) {
            const auto p = simplex_point(rng, lo.dim);
            const double bl = beval(lo, p, 1e-3).value;
            const double bh = beval(hi, p, 1e-3).value;
            CHECK(bl >= bh - 2e-3 * std::max(1.0, bh));
        }
    }
}

TEST_CASE("transform lands between the reciprocal norm envelopes") {
    SplitMix64 rng(25);
    std::vector<FunctionHandle> handles;
    handles.push_back(make_norm_handle(3, 1.0));
    handles.push_back(make_norm_handle(3, INFINITY));
    handles.push_back(make_alpha_handle(Graph::cycle(5)));
    handles.push_back(sqrt_sum_handle());
    for (const auto& h : handles) {
        REQUIRE(h.c1 > 0.0);
        REQUIRE(h.c2 >= h.c1);
        for (int t = 0; t < 10; t++) {
            const auto p = simplex_point(rng, h.dim);
            const double v = beval(h, p, 1e-4).value;
            CHECK(v >= norm2(p) / h.c2 * (1.0 - 1e-3));
            CHECK(v <= norm2(p) / h.c1 * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("transform of a handle is again a valid handle") {
    const auto inner = {make_norm_handle(3, 1.0), make_alpha_handle(Graph::cycle(5))};
    for (const auto& f : inner) {
        FunctionHandle w;
        w.dim = f.dim;
        w.name = "B-" + f.name;
        // normalize, then snap to a coarse lattice so scaled copies of the
        // same ray reach the inner search bit-identically, and rescale; the
        // snap keeps degree one scaling exact instead of search-noise exact
        w.eval = [f](const std::vector<double>& q) {
            double s = 0.0;
            for (double v : q) s += v;
            if (s <= 0.0) return 0.0;
            std::vector<double> u(q);
            for (double& v : u) v = std::llround(v / s * 1048576.0) / 1048576.0;
            return s * beval(f, u, 1e-3).value;
        };
        w.declared_convex = true;
        w.declared_monotone = true;
        w.c1 = 1.0 / f.c2;
        w.c2 = 1.0 / f.c1;
        CHECK_NOTHROW(audit_handle(w));
    }
}

TEST_CASE("transform is Lipschitz at the reciprocal lower constant") {
    SplitMix64 rng(26);
    const auto handles = {make_norm_handle(3, 1.0), make_alpha_handle(Graph::cycle(5))};
    const double tol = 1e-4;
    for (const auto& h : handles) {
        for (int t = 0; t < 12; t++) {
            const auto p = simplex_point(rng, h.dim);
            const auto r = simplex_point(rng, h.dim);
            const double vp = beval(h, p, tol).value;
            const double vr = beval(h, r, tol).value;
            std::vector<double> d(p);
            for (size_t i = 0; i < d.size(); i++) d[i] -= r[i];
            CHECK(std::abs(vp - vr) <= norm2(d) / h.c1 + 2.0 * tol);
        }
    }
}

TEST_CASE("transform swaps the invariants of a graph and its complement") {
    SplitMix64 rng(27);
    int done = 0;
    while (done < 50) {
        const int n = 2 + static_cast<int>(rng.uniform_int(0, 4));
        const Graph g = random_graph(rng, n, rng.uniform(0.2, 0.8));
        const Graph gc = complement(g);
        std::vector<double> p(n);
        for (double& v : p) v = rng.uniform(0.0, 2.0);

        const double a = alpha(g, p).value;
        const double as = alpha_star(g, p).value;
        const double th = lovasz_theta(g, p).value;
        const double ba = beval(make_alpha_star_handle(gc), p, 1e-3).value;
        const double bas = beval(make_alpha_handle(gc), p, 1e-3).value;
        const double bth = beval(make_theta_handle(gc), p, 1e-3).value;

        CHECK(std::abs(a - ba) <= 1e-2 * std::max({1.0, a, ba}));
        CHECK(std::abs(as - bas) <= 1e-2 * std::max({1.0, as, bas}));
        CHECK(std::abs(th - bth) <= 1e-2 * std::max({1.0, th, bth}));
        done++;
    }
}

TEST_CASE("mixtures of invariant handles stay invariant") {
    const Graph c5 = Graph::cycle(5);
    const auto ha = make_alpha_handle(c5);
    const auto hs = make_alpha_star_handle(c5);
    const auto ht = make_theta_handle(c5);
    auto samples = simplex_points(28, 5, 3);
    samples.push_back(std::vector<double>(5, 0.2));

    for (const double t : {0.25, 0.5, 0.75}) {
        const auto rep = involution_check(mix_handles(ha, hs, t), samples, 2e-2);
        CHECK(rep.classification == "fixed-point-consistent");
        CHECK(rep.min_gap >= -2e-2);
    }
    CHECK(involution_check(mix_handles(ha, ht, 0.5), samples, 2e-2).classification ==
          "fixed-point-consistent");
    CHECK(involution_check(mix_handles(ht, hs, 0.5), samples, 2e-2).classification ==
          "fixed-point-consistent");
}

TEST_CASE("involution check separates invariant from shrinking handles") {
    auto samples = simplex_points(29, 2, 4);
    samples.push_back({0.5, 0.5});

    const auto rep2 = involution_check(make_norm_handle(2, 2.0), samples, 1e-3);
    CHECK(rep2.classification == "fixed-point-consistent");
    CHECK(std::abs(rep2.max_gap) <= 1e-3);

    const auto repm = involution_check(make_max_linear_handle({{1.0, 0.0}, {0.0, 2.0}}), samples, 1e-2);
    CHECK(repm.classification == "fixed-point-consistent");

    const auto reps = involution_check(sqrt_sum_handle(), samples, 1e-2);
    CHECK(reps.classification == "not-invariant");
    CHECK(reps.max_gap >= 0.3);       // the gap at the center is 1/2
    CHECK(reps.min_gap >= -1e-2);     // but never negative beyond noise
}

TEST_CASE("triple transform collapses onto the single transform") {
    const auto samples2 = simplex_points(30, 2, 5);
    const auto samples3 = simplex_points(31, 3, 5);

    const auto r1 = b_cubed_identity_check(make_norm_handle(3, 2.0), samples3, 1e-2);
    CHECK(r1.max_deviation <= 3e-2);
    const auto r2 = b_cubed_identity_check(make_linear_handle({1.0, 2.0}), samples2, 1e-2);
    CHECK(r2.max_deviation <= 3e-2);
    const auto r3 = b_cubed_identity_check(sqrt_sum_handle(), samples2, 1e-2);
    CHECK(r3.max_deviation <= 3e-2);
    CHECK(r3.deviations.size() == samples2.size());

    CHECK_THROWS_AS(b_cubed_identity_check(make_norm_handle(4, 2.0), simplex_points(32, 4, 2), 1e-2),
                    std::invalid_argument);

    // closed form spot check: the transform of <(1,2),q> is max(p1, p2/2),
    // itself convex and monotone, so its double transform returns it
    const auto bf = make_max_linear_handle({{1.0, 0.0}, {0.0, 0.5}});
    CHECK(bsquare(bf, {1.0, 1.0}, 1e-4) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(bsquare(bf, {0.2, 0.8}, 1e-4) == doctest::Approx(0.4).epsilon(1e-3));
}

TEST_CASE("fixed point detector accepts exactly the Euclidean norm") {
    const auto probes = simplex_points(33, 2, 32);
    CHECK(norm_fixed_point_check(make_norm_handle(2, 2.0), probes, 1e-6));
    CHECK_FALSE(norm_fixed_point_check(make_norm_handle(2, 1.0), probes, 1e-6));
    CHECK_FALSE(norm_fixed_point_check(scale_handle(make_norm_handle(2, 2.0), 2.0), probes, 1e-6));
    const auto probes3 = simplex_points(34, 3, 32);
    CHECK(norm_fixed_point_check(make_norm_handle(3, 2.0), probes3, 1e-6));
}

TEST_CASE("tabulated handles reproduce linear functions exactly") {
    // four lattice points per edge, so three steps: values of 3*q1 + 6*q2
    // listed in ascending lexicographic lattice order
    const auto h = make_custom_handle(
        R"({"n": 2, "grid": 4, "values": [6.0, 5.0, 4.0, 3.0], "name": "affine-table"})");
    CHECK(h.name == "affine-table");
    CHECK(h.eval({1.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(h.eval({0.0, 1.0}) == doctest::Approx(6.0).epsilon(1e-12));
    CHECK(h.eval({0.3, 0.7}) == doctest::Approx(5.1).epsilon(1e-12));
    CHECK(h.eval({0.125, 0.875}) == doctest::Approx(5.625).epsilon(1e-12));
    // homogeneous extension off the simplex
    CHECK(h.eval({0.6, 1.4}) == doctest::Approx(10.2).epsilon(1e-12));
    CHECK(h.eval({0.0, 0.0}) == 0.0);

    // three variables: values of 3*q1 + 6*q2 + 12*q3 at all lattice points
    std::string vals;
    for (int k1 = 0; k1 <= 3; k1++)
        for (int k2 = 0; k1 + k2 <= 3; k2++) {
            const int k3 = 3 - k1 - k2;
            char buf[48];
            std::snprintf(buf, sizeof buf, "%s%d", vals.empty() ? "" : ", ", k1 + 2 * k2 + 4 * k3);
            vals += buf;
        }
    const auto h3 = make_custom_handle(
        std::string(R"({"n": 3, "grid": 4, "values": [)") + vals + "]}");
    SplitMix64 rng(35);
    for (int t = 0; t < 10; t++) {
        const auto q = simplex_point(rng, 3);
        const double want = 3.0 * q[0] + 6.0 * q[1] + 12.0 * q[2];
        CHECK(h3.eval(q) == doctest::Approx(want).epsilon(1e-12));
        std::vector<double> q2(q);
        for (double& v : q2) v *= 1.75;
        CHECK(h3.eval(q2) == doctest::Approx(1.75 * want).epsilon(1e-12));
    }
}

TEST_CASE("tabulated handles feed the transform like any other") {
    // constant one on the lattice tabulates the plain sum, whose transform
    // is the largest entry
    const auto flat = make_custom_handle(
        R"({"n": 2, "grid": 2, "values": [1.0, 1.0], "convex": true, "monotone": true})");
    CHECK(flat.declared_convex);
    CHECK(flat.declared_monotone);
    CHECK(flat.eval({2.0, 6.0}) == doctest::Approx(8.0).epsilon(1e-12));
    CHECK(beval(flat, {0.3, 0.7}).value == doctest::Approx(0.7).epsilon(1e-5));
    CHECK(bsquare(flat, {0.3, 0.7}, 1e-3) == doctest::Approx(1.0).epsilon(2e-3));
}

TEST_CASE("tabulated handle parsing rejects malformed input") {
    CHECK_THROWS_AS(make_custom_handle("{"), ParseError);
    CHECK_THROWS_AS(make_custom_handle(R"({"grid": 4, "values": [1.0]})"), ParseError);
    CHECK_THROWS_AS(make_custom_handle(R"({"n": 2, "values": [1.0]})"), ParseError);
    CHECK_THROWS_AS(make_custom_handle(R"({"n": 2, "grid": 4, "values": [1.0, 1.0]})"), ParseError);
    CHECK_THROWS_AS(make_custom_handle(R"({"n": 0, "grid": 4, "values": []})"), ParseError);
    CHECK_THROWS_AS(make_custom_handle(R"({"n": 20, "grid": 2, "values": [1.0]})"), ParseError);
    CHECK_THROWS_AS(make_custom_handle(R"({"n": 2, "grid": 1, "values": [1.0, 1.0]})"), ParseError);
    CHECK_THROWS_AS(
        make_custom_handle(R"({"n": 2, "grid": 2, "values": [1.0, 1.0], "c1": 2.0, "c2": 1.0})"),
        ParseError);

    try {
        make_custom_handle(R"({"n": 2, "grid": 2, "values": [1.0, 0.0]})");
        FAIL("nonpositive lattice value must not pass the audit");
    } catch (const AuditError& e) {
        CHECK(std::string(e.what()).find("nondegenerate") != std::string::npos);
    }
}

TEST_CASE("handle audits name the axiom they reject") {
    try {
        make_linear_handle({1.0, 0.0});
        FAIL("a zero coefficient kills positivity on a vertex");
    } catch (const AuditError& e) {
        CHECK(std::string(e.what()).find("nondegenerate") != std::string::npos);
    }

    FunctionHandle shifted;
    shifted.dim = 2;
    shifted.name = "shifted";
    shifted.eval = [](const std::vector<double>& q) { return q[0] + q[1] + 0.1; };
    try {
        audit_handle(shifted);
        FAIL("an affine offset breaks degree one scaling");
    } catch (const AuditError& e) {
        CHECK(std::string(e.what()).find("positive-affine") != std::string::npos);
    }

    FunctionHandle broken;
    broken.dim = 2;
    broken.name = "broken";
    broken.eval = [](const std::vector<double>&) { return std::nan(""); };
    try {
        audit_handle(broken);
        FAIL("a non finite value must be rejected");
    } catch (const AuditError& e) {
        CHECK(std::string(e.what()).find("finite") != std::string::npos);
    }
}

TEST_CASE("transform evaluations are deterministic") {
    const auto h = make_alpha_star_handle(Graph::cycle(5));
    const std::vector<double> p{0.4, 0.3, 0.1, 0.15, 0.05};
    const auto r1 = beval(h, p, 1e-4);
    const auto r2 = beval(h, p, 1e-4);
    CHECK(std::memcmp(&r1.value, &r2.value, sizeof r1.value) == 0);
    REQUIRE(r1.q.size() == r2.q.size());
    CHECK(std::memcmp(r1.q.data(), r2.q.data(), r1.q.size() * sizeof(double)) == 0);
    CHECK(r1.evaluations == r2.evaluations);

    const double b1 = bsquare(h, p, 1e-3);
    const double b2 = bsquare(h, p, 1e-3);
    CHECK(std::memcmp(&b1, &b2, sizeof b1) == 0);
}

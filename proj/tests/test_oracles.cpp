#include <algorithm>
#include <random>

#include "doctest.h"
#include "helly/generators.hpp"
#include "helly/graph.hpp"
#include "helly/oracles.hpp"

using namespace helly;

namespace {

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; i++) e.push_back({i, i + 1});
    return Graph::from_edges(n, e);
}

Graph cycle4() {
    return Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

Graph star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; i++) e.push_back({0, i});
    return Graph::from_edges(leaves + 1, e);
}

// The three distance sums of a quadruple; the gap between the two largest
// must reproduce the reported hyperbolicity.
bool delta_witness_ok(const Graph& g, const std::array<int, 4>& w, int two_delta) {
    DistanceVector da = bfs(g, w[0]), db = bfs(g, w[1]), dc = bfs(g, w[2]);
    std::array<int, 3> sums{da[w[1]] + dc[w[3]], da[w[2]] + db[w[3]], da[w[3]] + db[w[2]]};
    std::sort(sums.begin(), sums.end());
    return sums[2] - sums[1] == two_delta;
}

bool beta_witness_ok(const Graph& g, const BetaWitness& w, int beta) {
    DistanceVector dv = bfs(g, w.v);
    if (dv[w.x] > w.r || dv[w.y] > w.r || dv[w.z] <= w.r) return false;
    DistanceVector dx = bfs(g, w.x), dy = bfs(g, w.y);
    if (dx[w.z] + dy[w.z] != dx[w.y]) return false;  // z must sit on a shortest x-y path
    return std::min(dx[w.z], dy[w.z]) == beta;
}

}  // namespace

TEST_CASE("all_ecc_bruteforce") {
    EccentricityTable p5 = all_ecc_bruteforce(path_graph(5));
    CHECK(p5.ecc == std::vector<int>{4, 3, 2, 3, 4});
    CHECK(p5.rad == 2);
    CHECK(p5.diam == 4);
    CHECK(p5.center == VertexSet{2});

    EccentricityTable k4 = all_ecc_bruteforce(complete(4));
    CHECK(k4.ecc == std::vector<int>{1, 1, 1, 1});
    CHECK(k4.rad == 1);
    CHECK(k4.diam == 1);
    CHECK(k4.center == VertexSet{0, 1, 2, 3});

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    EccentricityTable kt = all_ecc_bruteforce(king);
    CHECK(kt.rad == 1);
    CHECK(kt.diam == 2);
    CHECK(kt.center == VertexSet{4});
    for (int v = 0; v < 9; v++) CHECK(kt.ecc[v] == (v == 4 ? 1 : 2));
}

TEST_CASE("all_ecc_bruteforce is thread-count independent") {
    Graph g = gen({"strong-product", {12, 9}, 42}).graph;
    CHECK(all_ecc_bruteforce(g, 1) == all_ecc_bruteforce(g, 4));
    CHECK(all_ecc_bruteforce(g, 1) == all_ecc_bruteforce(g, 8));
}

TEST_CASE("subset_ecc") {
    Graph p5 = path_graph(5);
    auto dm = distance_matrix(p5);
    SubsetEccReport r = subset_ecc(p5, {0, 4}, dm);
    CHECK(r.ecc_m == std::vector<int>{4, 3, 2, 3, 4});
    CHECK(r.rad_m == 2);
    CHECK(r.diam_m == 4);
    CHECK(r.center_m == VertexSet{2});

    // M = V coincides with plain eccentricities.
    SubsetEccReport full = subset_ecc(p5, {0, 1, 2, 3, 4}, dm);
    EccentricityTable t = all_ecc_bruteforce(p5);
    CHECK(full.ecc_m == t.ecc);
    CHECK(full.rad_m == t.rad);
    CHECK(full.diam_m == t.diam);
    CHECK(full.center_m == t.center);

    Graph c4 = cycle4();
    auto dm4 = distance_matrix(c4);
    SubsetEccReport rc = subset_ecc(c4, {0, 1, 2, 3}, dm4);
    CHECK(rc.rad_m == 2);
    CHECK(rc.diam_m == 2);

    CHECK_THROWS_AS(subset_ecc(p5, {}, dm), GraphError);
}

TEST_CASE("helly_check_subsets") {
    CHECK(helly_check_subsets(path_graph(5)).helly);
    CHECK(helly_check_subsets(complete(4)).helly);

    Graph c4 = cycle4();
    HellyVerdict v = helly_check_subsets(c4);
    REQUIRE_FALSE(v.helly);
    // The witness must actually violate the radius law.
    auto dm = distance_matrix(c4);
    SubsetEccReport w = subset_ecc(c4, v.witness, dm);
    CHECK(w.rad_m != (w.diam_m + 1) / 2);

    CHECK_THROWS_AS(helly_check_subsets(star(16)), CapExceededError);  // n = 17 > cap
    CHECK(helly_check_subsets(star(16), 17).helly);
    // The 32-bit subset masks put a hard ceiling on the cap.
    CHECK_THROWS_AS(helly_check_subsets(path_graph(31), 40), CapExceededError);
}

TEST_CASE("helly_check_equal_radii") {
    CHECK(helly_check_equal_radii(path_graph(5), 1).pass);
    CHECK(helly_check_equal_radii(cycle4(), 2).pass);  // k >= diam: every ball is V

    EqualRadiiVerdict v = helly_check_equal_radii(cycle4(), 1);
    REQUIRE_FALSE(v.pass);
    CHECK(v.witness == VertexSet{0, 1, 2, 3});
}

TEST_CASE("unimodality, center formula and center isometry checks") {
    Graph p5 = path_graph(5);
    EccentricityTable tp = all_ecc_bruteforce(p5);
    CHECK(unimodality_check(p5, tp).pass);
    CHECK(center_formula_check(p5, tp));
    CHECK(center_isometry_check(p5, tp));

    Graph c4 = cycle4();
    EccentricityTable tc = all_ecc_bruteforce(c4);
    CHECK(unimodality_check(c4, tc).pass);  // vacuous: all vertices central
    CHECK(center_formula_check(c4, tc));
    CHECK(center_isometry_check(c4, tc));

    // Two triangles joined by a two-edge path; center is the middle vertex.
    Graph tt = Graph::from_edges(
        7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    EccentricityTable t = all_ecc_bruteforce(tt);
    CHECK(t.ecc == std::vector<int>{4, 4, 3, 2, 3, 4, 4});
    CHECK(t.center == VertexSet{3});
    CHECK(unimodality_check(tt, t).pass);
    CHECK(center_formula_check(tt, t));
    CHECK(center_isometry_check(tt, t));

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    CHECK(center_isometry_check(king, all_ecc_bruteforce(king)));
}

TEST_CASE("hyperbolicity_exact") {
    Graph tree = gen({"random-tree", {25}, 7}).graph;
    CHECK(hyperbolicity_exact(tree).two_delta == 0);

    Graph c4 = cycle4();
    HyperbolicityResult hc = hyperbolicity_exact(c4);
    CHECK(hc.two_delta == 2);
    CHECK(delta_witness_ok(c4, hc.witness, 2));

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    HyperbolicityResult hk = hyperbolicity_exact(king);
    CHECK(hk.two_delta == 2);
    CHECK(delta_witness_ok(king, hk.witness, hk.two_delta));

    CHECK_THROWS_AS(hyperbolicity_exact(path_graph(8), 5), CapExceededError);
}

TEST_CASE("pseudoconvexity_beta") {
    Graph tree = gen({"random-tree", {20}, 3}).graph;
    BetaResult bt = pseudoconvexity_beta(tree);
    CHECK(bt.beta == 0);
    CHECK_FALSE(bt.witness.has_value());

    Graph c4 = cycle4();
    BetaResult bc = pseudoconvexity_beta(c4);
    CHECK(bc.beta == 1);
    REQUIRE(bc.witness.has_value());
    CHECK(beta_witness_ok(c4, *bc.witness, 1));

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    BetaResult bk = pseudoconvexity_beta(king);
    CHECK(bk.beta == 1);
    REQUIRE(bk.witness.has_value());
    CHECK(beta_witness_ok(king, *bk.witness, bk.beta));

    CHECK_THROWS_AS(pseudoconvexity_beta(path_graph(10), 8), CapExceededError);
}

TEST_CASE("kappa_exact") {
    Graph p5 = path_graph(5);
    KappaResult kp = kappa_exact(p5);
    CHECK(kp.kappa == 1);
    CHECK_FALSE(kp.isometry_mismatch);
    // The witness subset's center must have the reported diameter.
    auto dm = distance_matrix(p5);
    SubsetEccReport w = subset_ecc(p5, kp.witness_m, dm);
    int cd = 0;
    for (int a : w.center_m)
        for (int b : w.center_m) cd = std::max(cd, dm[a][b]);
    CHECK(cd == 1);

    CHECK(kappa_exact(complete(4)).kappa == 1);
    CHECK(kappa_exact(Graph::from_edges(2, {{0, 1}})).kappa == 1);

    CHECK_THROWS_AS(kappa_exact(star(14)), CapExceededError);  // n = 15 > cap
}

TEST_CASE("parameter_inequality_report") {
    Graph p5 = path_graph(5);
    EccentricityTable tp = all_ecc_bruteforce(p5);
    ParamReport rp = parameter_inequality_report(p5, 0, 0, 1, tp);
    CHECK(rp.all_pass);
    CHECK_FALSE(rp.verdicts.empty());

    Graph k4 = complete(4);
    EccentricityTable tk = all_ecc_bruteforce(k4);
    CHECK(parameter_inequality_report(k4, 0, 0, 1, tk).all_pass);

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    EccentricityTable tg = all_ecc_bruteforce(king);
    int td = hyperbolicity_exact(king).two_delta;
    int be = pseudoconvexity_beta(king).beta;
    int ka = kappa_exact(king).kappa;
    CHECK(parameter_inequality_report(king, td, be, ka, tg).all_pass);
}

TEST_CASE("hyperbolicity witness verifies on random instances") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 6; trial++) {
        Graph g = gen({"random-helly-small", {10}, rng()}).graph;
        HyperbolicityResult h = hyperbolicity_exact(g);
        CHECK(delta_witness_ok(g, h.witness, h.two_delta));
    }
}

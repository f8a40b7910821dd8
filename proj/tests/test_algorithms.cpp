#include <algorithm>
#include <random>

#include "doctest.h"
#include "helly/algorithms.hpp"
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

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) e.push_back({i, j});
    return Graph::from_edges(n, e);
}

// A small pool of verified Helly instances for property checks.
std::vector<Graph> helly_pool() {
    std::vector<Graph> pool;
    pool.push_back(path_graph(2));
    pool.push_back(path_graph(7));
    pool.push_back(complete(5));
    pool.push_back(gen({"king-grid", {3, 4}, 0}).graph);
    pool.push_back(gen({"block-graph", {4, 3}, 5}).graph);
    pool.push_back(gen({"cone", {9}, 6}).graph);
    for (std::uint64_t seed = 1; seed <= 6; seed++)
        pool.push_back(gen({"random-helly-small", {11}, seed}).graph);
    for (const Graph& g : pool)
        if (g.num_vertices() <= 16) REQUIRE(helly_check_subsets(g).helly);
    return pool;
}

}  // namespace

TEST_CASE("expand_and_merge base cases") {
    GroupSystem sys;
    sys.groups = {{{0}, {0}}, {{2}, {1}}};

    // Disjoint growth: two groups stay two groups.
    GroupSystem a = expand_and_merge(sys, {{0, 1}, {2}});
    REQUIRE(a.groups.size() == 2);
    CHECK(a.groups[0].z == VertexSet{0, 1});
    CHECK(a.groups[0].xs == std::vector<int>{0});
    CHECK(a.groups[1].z == VertexSet{2});
    CHECK(a.step == 1);

    // Overlapping growth: forced merge at the shared vertex.
    GroupSystem b = expand_and_merge(sys, {{0, 1}, {1, 2}});
    REQUIRE(b.groups.size() == 1);
    CHECK(b.groups[0].z == VertexSet{1});
    CHECK(b.groups[0].xs == std::vector<int>{0, 1});

    // An empty growth set is a structural failure.
    CHECK_THROWS_AS(expand_and_merge(sys, {{0, 1}, {}}), NotHellyError);
}

TEST_CASE("expand_and_merge first step of the threshold run on P5") {
    // Closed neighborhoods of the five singleton start groups.
    GroupSystem sys;
    for (int v = 0; v < 5; v++) sys.groups.push_back({{v}, {v}});
    GroupSystem next = expand_and_merge(
        sys, {{0, 1}, {0, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4}});
    REQUIRE(next.groups.size() == 2);
    // Vertex 1 lies in three growth sets (tie with vertex 3, smaller id wins):
    // their intersection is {1}; the remaining two sets intersect to {3,4}.
    CHECK(next.groups[0].z == VertexSet{1});
    CHECK(next.groups[0].xs == std::vector<int>{0, 1, 2});
    CHECK(next.groups[1].z == VertexSet{3, 4});
    CHECK(next.groups[1].xs == std::vector<int>{3, 4});
}

TEST_CASE("ecc_at_most_k") {
    Graph p5 = path_graph(5);
    ThresholdEcc t3 = ecc_at_most_k(p5, 3, true);
    CHECK(t3.rad == 2);
    CHECK(t3.center == VertexSet{2});
    CHECK(t3.ecc == std::vector<int>{-1, 3, 2, 3, -1});

    ThresholdEcc t1 = ecc_at_most_k(p5, 1, true);
    CHECK(t1.empty());

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    ThresholdEcc k1 = ecc_at_most_k(king, 1, true);
    CHECK(k1.rad == 1);
    CHECK(k1.center == VertexSet{4});
    for (int v = 0; v < 9; v++) CHECK(k1.ecc[v] == (v == 4 ? 1 : -1));

    CHECK_THROWS_AS(ecc_at_most_k(p5, -1), GraphError);
}

TEST_CASE("ecc_at_most_k matches the oracle for every threshold") {
    for (const Graph& g : helly_pool()) {
        EccentricityTable t = all_ecc_bruteforce(g);
        for (int k = 0; k <= t.diam + 1; k++) {
            ThresholdEcc th = ecc_at_most_k(g, k, true);
            for (int v = 0; v < g.num_vertices(); v++)
                CHECK(th.ecc[v] == (t.ecc[v] <= k ? t.ecc[v] : -1));
            if (k >= t.rad) {
                CHECK(th.rad == t.rad);
                CHECK(th.center == t.center);
            } else {
                CHECK(th.empty());
            }
        }
    }
}

TEST_CASE("descend_step") {
    Graph p5 = path_graph(5);
    DescendResult d0 = descend_step(p5, 0, bfs(p5, 0));
    CHECK_FALSE(d0.central);
    CHECK(d0.vertex == 1);
    CHECK(d0.ecc == 3);

    DescendResult d2 = descend_step(p5, 2, bfs(p5, 2));
    CHECK(d2.central);
    CHECK(d2.ecc == 2);

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    DescendResult dk = descend_step(king, 0, bfs(king, 0));
    CHECK_FALSE(dk.central);
    CHECK(dk.vertex == 4);
    CHECK(dk.ecc == 1);
}

TEST_CASE("descend_step never reports a non-improving neighbor") {
    for (const Graph& g : helly_pool()) {
        EccentricityTable t = all_ecc_bruteforce(g);
        for (int v = 0; v < g.num_vertices(); v++) {
            DescendResult r = descend_step(g, v, bfs(g, v));
            if (r.central) {
                CHECK(r.ecc == t.rad);  // local minima are global on Helly inputs
                CHECK(t.ecc[v] == t.rad);
            } else {
                CHECK(r.ecc < t.ecc[v]);
                CHECK(r.ecc == t.ecc[r.vertex]);
            }
        }
    }
}

TEST_CASE("approx_center") {
    ApproxCenter p = approx_center(path_graph(5));
    CHECK(p.vertex == 2);
    CHECK(p.ecc == 2);

    Graph st = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    ApproxCenter s = approx_center(st);
    CHECK(s.vertex == 0);
    CHECK(s.ecc == 1);

    Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    ApproxCenter c = approx_center(c4);
    CHECK(c.ecc == 2);  // rad + 2*delta = 4, and every vertex has ecc 2
}

TEST_CASE("approx_center respects the hyperbolicity bound") {
    for (const Graph& g : helly_pool()) {
        EccentricityTable t = all_ecc_bruteforce(g);
        int two_delta = hyperbolicity_exact(g).two_delta;
        ApproxCenter a = approx_center(g);
        CHECK(a.ecc == t.ecc[a.vertex]);
        CHECK(a.ecc <= t.rad + two_delta);
    }
}

TEST_CASE("find_center") {
    CenterResult p5 = find_center(path_graph(5));
    CHECK(p5.vertex == 2);
    CHECK(p5.radius == 2);

    CenterResult p400 = find_center(path_graph(400));
    CHECK((p400.vertex == 199 || p400.vertex == 200));
    CHECK(p400.radius == 200);

    CenterResult king = find_center(gen({"king-grid", {3, 3}, 0}).graph);
    CHECK(king.vertex == 4);
    CHECK(king.radius == 1);

    for (const Graph& g : helly_pool()) {
        EccentricityTable t = all_ecc_bruteforce(g);
        CenterResult c = find_center(g);
        CHECK(c.radius == t.rad);
        CHECK(t.ecc[c.vertex] == t.rad);
    }
}

TEST_CASE("ecc_from_center") {
    Graph p5 = path_graph(5);
    EccentricityTable t = ecc_from_center(p5, {2}, 2);
    CHECK(t.ecc == std::vector<int>{4, 3, 2, 3, 4});
    CHECK(t.diam == 4);

    Graph k4 = complete(4);
    CHECK(ecc_from_center(k4, {0, 1, 2, 3}, 1).ecc == std::vector<int>{1, 1, 1, 1});

    Graph p9 = path_graph(9);
    CHECK(ecc_from_center(p9, {4}, 4).ecc ==
          std::vector<int>{8, 7, 6, 5, 4, 5, 6, 7, 8});
}

TEST_CASE("all_ecc_sqrt small instances") {
    Graph p5 = path_graph(5);
    EccentricityTable t = all_ecc_sqrt(p5, true);
    CHECK(t.ecc == std::vector<int>{4, 3, 2, 3, 4});
    CHECK(t == all_ecc_bruteforce(p5));

    Graph king = gen({"king-grid", {10, 10}, 0}).graph;
    CHECK(all_ecc_sqrt(king, true) == all_ecc_bruteforce(king));
}

TEST_CASE("all_ecc_sqrt long path takes the band-layer branch") {
    // P400: rad 200 exceeds the threshold 5*ceil(sqrt(400))+6 = 106, so the
    // run must go through layer selection and distant gates.
    Graph p = path_graph(400);
    EccentricityTable t = all_ecc_sqrt(p, true);
    for (int v = 0; v < 400; v++) CHECK(t.ecc[v] == std::max(v, 399 - v));
    CHECK(t == all_ecc_bruteforce(p));
}

TEST_CASE("phase1_partition on P9") {
    Graph p9 = path_graph(9);
    // c=4, k=1: S_1 = {3,4,5}, r=4, i=1: A = layer 3 = {0,8}; the two groups
    // descend to {2} and {6} in the first layer around S_1.
    DistanceVector d_sk = multi_source_bfs(p9, ball(p9, 4, 1));
    Phase1Result ph = phase1_partition(p9, 4, 1, 1, 4, d_sk, true);
    CHECK(ph.a_set == VertexSet{0, 8});
    REQUIRE(ph.groups.size() == 2);
    CHECK(ph.groups[0].z == VertexSet{2});
    CHECK(ph.groups[0].xs == std::vector<int>{0});
    CHECK(ph.groups[1].z == VertexSet{6});
    CHECK(ph.groups[1].xs == std::vector<int>{1});
}

TEST_CASE("phase2_filter on P9") {
    Graph p9 = path_graph(9);
    VertexSet s1 = ball(p9, 4, 1);
    DistanceVector d_sk = multi_source_bfs(p9, s1);
    Phase1Result ph = phase1_partition(p9, 4, 1, 1, 4, d_sk, true);
    // S_{1,1} = { s in S_1 : d(s,0) <= 4 and d(s,8) <= 4 } = {4}.
    CHECK(phase2_filter(p9, ph, 4, 1, 1, 4, s1, true) == VertexSet{4});
}

TEST_CASE("extract_center") {
    Graph p5 = path_graph(5);
    CHECK(extract_center(p5, 2, 1, 2, true) == VertexSet{2});

    Graph p9 = path_graph(9);
    CHECK(extract_center(p9, 4, 1, 4, true) == VertexSet{4});

    Graph k4 = complete(4);
    CHECK(extract_center(k4, 0, 1, 1, true) == VertexSet{0, 1, 2, 3});
}

TEST_CASE("extract_center equals center intersected with the ball") {
    for (const Graph& g : helly_pool()) {
        EccentricityTable t = all_ecc_bruteforce(g);
        for (int c : t.center)
            for (int k = 0; k <= t.diam; k++)
                CHECK(extract_center(g, c, k, t.rad, true) ==
                      set_intersect(t.center, ball(g, c, k)));
    }
}

TEST_CASE("all_ecc_hyperbolic") {
    Graph p400 = path_graph(400);
    CHECK(all_ecc_hyperbolic(p400) == all_ecc_bruteforce(p400));

    Graph king = gen({"king-grid", {3, 3}, 0}).graph;
    CHECK(all_ecc_hyperbolic(king, 1, true) == all_ecc_bruteforce(king));  // 2*delta = 1 -> k=2
    CHECK(all_ecc_hyperbolic(king, std::nullopt, true) == all_ecc_bruteforce(king));

    // Two K4 blocks sharing vertex 3: center {3} with radius 1.
    Graph bg = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                     {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
    EccentricityTable t = all_ecc_hyperbolic(bg, std::nullopt, true);
    CHECK(t == all_ecc_bruteforce(bg));
    CHECK(t.center == VertexSet{3});
    CHECK(t.rad == 1);
}

TEST_CASE("fast algorithms agree with the oracle on the pool") {
    for (const Graph& g : helly_pool()) {
        EccentricityTable t = all_ecc_bruteforce(g);
        CHECK(all_ecc_sqrt(g, true) == t);
        CHECK(all_ecc_hyperbolic(g, std::nullopt, true) == t);
        int two_delta = hyperbolicity_exact(g).two_delta;
        CHECK(all_ecc_hyperbolic(g, two_delta, true) == t);
    }
}

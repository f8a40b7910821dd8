#include "helly/generators.hpp"

#include <random>

#include "helly/oracles.hpp"

namespace helly {

namespace {

std::vector<std::pair<int, int>> path_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; v++) e.emplace_back(v, v + 1);
    return e;
}

Graph make_path(int n) { return Graph::from_edges(n, path_edges(n)); }

Graph make_random_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; v++) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        e.emplace_back(pick(rng), v);
    }
    return Graph::from_edges(n, e);
}

Graph make_rect_grid(int rows, int cols) {
    std::vector<std::pair<int, int>> e;
    auto id = [cols](int i, int j) { return i * cols + j; };
    for (int i = 0; i < rows; i++)
        for (int j = 0; j < cols; j++) {
            if (j + 1 < cols) e.emplace_back(id(i, j), id(i, j + 1));
            if (i + 1 < rows) e.emplace_back(id(i, j), id(i + 1, j));
        }
    return Graph::from_edges(rows * cols, e);
}

Graph make_block_graph(int blocks, int block_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> cliques;
    int next = 0;
    std::vector<std::pair<int, int>> e;
    auto add_clique = [&](const std::vector<int>& members) {
        for (size_t i = 0; i < members.size(); i++)
            for (size_t j = i + 1; j < members.size(); j++)
                e.emplace_back(members[i], members[j]);
    };
    std::vector<int> first(block_size);
    for (int& v : first) v = next++;
    add_clique(first);
    for (int b = 1; b < blocks; b++) {
        std::uniform_int_distribution<int> pick(0, next - 1);
        std::vector<int> members{pick(rng)};  // shared cut vertex
        for (int i = 1; i < block_size; i++) members.push_back(next++);
        add_clique(members);
    }
    return Graph::from_edges(next, e);
}

Graph make_cone(int n, std::uint64_t seed) {
    if (n == 1) return make_path(1);
    Graph base = make_random_tree(n - 1, seed);
    std::vector<std::pair<int, int>> e = base.edges();
    int apex = n - 1;
    for (int v = 0; v < n - 1; v++) e.emplace_back(v, apex);
    return Graph::from_edges(n, e);
}

Graph make_random_helly_small(int n, std::uint64_t seed, int* attempts_out) {
    std::mt19937_64 rng(seed);
    // Sparse candidates are far more likely to be Helly (trees, block-like
    // graphs); cycle through a few densities for variety.
    const double densities[] = {1.0, 1.3, 1.8, 2.5};
    for (int attempt = 0; attempt < 200000; attempt++) {
        double p = std::min(0.95, densities[attempt % 4] / std::max(1, n - 1));
        std::vector<std::pair<int, int>> e;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++)
                if (coin(rng) < p) e.emplace_back(u, v);
        try {
            Graph g = Graph::from_edges(n, e);
            if (helly_check_subsets(g, std::max(16, n)).helly) {
                if (attempts_out) *attempts_out = attempt + 1;
                return g;
            }
        } catch (const GraphError&) {
            // disconnected candidate; resample
        }
    }
    throw GraphError("random-helly-small: rejection sampling did not converge");
}

void require_sizes(const GenSpec& spec, size_t count) {
    if (spec.sizes.size() != count)
        throw GraphError("gen: family '" + spec.family + "' takes " + std::to_string(count) +
                         " size argument(s)");
    for (int s : spec.sizes)
        if (s < 1) throw GraphError("gen: sizes must be >= 1");
}

}  // namespace

Graph strong_product(const Graph& a, const Graph& b) {
    int na = a.num_vertices(), nb = b.num_vertices();
    auto id = [nb](int i, int j) { return i * nb + j; };
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < na; i++)
        for (int j = 0; j < nb; j++) {
            for (int j2 : b.neighbors(j))
                if (j2 > j) e.emplace_back(id(i, j), id(i, j2));
            for (int i2 : a.neighbors(i)) {
                if (i2 > i) e.emplace_back(id(i, j), id(i2, j));
                for (int j2 : b.neighbors(j))
                    if (i2 > i) e.emplace_back(id(i, j), id(i2, j2));
            }
        }
    return Graph::from_edges(na * nb, e);
}

std::vector<std::string> known_families() {
    return {"path",  "random-tree", "king-grid",      "rect-grid",
            "block-graph", "cone",  "strong-product", "random-helly-small"};
}

GenResult gen(const GenSpec& spec) {
    GenResult res;
    if (spec.family == "path") {
        require_sizes(spec, 1);
        res.graph = make_path(spec.sizes[0]);
        res.expected_helly = true;
        res.note = "trees are Helly";
    } else if (spec.family == "random-tree") {
        require_sizes(spec, 1);
        res.graph = make_random_tree(spec.sizes[0], spec.seed);
        res.expected_helly = true;
        res.note = "trees are Helly";
    } else if (spec.family == "king-grid") {
        require_sizes(spec, 2);
        res.graph = strong_product(make_path(spec.sizes[0]), make_path(spec.sizes[1]));
        res.expected_helly = true;
        res.note = "strong product of paths; strong products preserve Hellyness";
    } else if (spec.family == "rect-grid") {
        require_sizes(spec, 2);
        res.graph = make_rect_grid(spec.sizes[0], spec.sizes[1]);
        res.expected_helly = !(spec.sizes[0] >= 2 && spec.sizes[1] >= 2);
        res.gamma_lower_bound = std::min(spec.sizes[0], spec.sizes[1]) - 1;
        res.note = res.expected_helly ? "degenerate grid is a path (Helly)"
                                      : "contains an isometric C4, so not Helly";
    } else if (spec.family == "block-graph") {
        require_sizes(spec, 2);
        res.graph = make_block_graph(spec.sizes[0], spec.sizes[1], spec.seed);
        res.expected_helly = true;
        res.note = "block graphs are strongly chordal, hence Helly";
    } else if (spec.family == "cone") {
        require_sizes(spec, 1);
        res.graph = make_cone(spec.sizes[0], spec.seed);
        res.expected_helly = true;
        res.note = "an apex vertex meets every ball of radius >= 1";
    } else if (spec.family == "strong-product") {
        require_sizes(spec, 2);
        Graph t1 = make_random_tree(spec.sizes[0], spec.seed);
        Graph t2 = make_random_tree(spec.sizes[1], spec.seed ^ 0x9e3779b97f4a7c15ull);
        res.graph = strong_product(t1, t2);
        res.expected_helly = true;
        res.note = "strong product of trees; strong products preserve Hellyness";
    } else if (spec.family == "random-helly-small") {
        require_sizes(spec, 1);
        if (spec.sizes[0] > 16)
            throw GraphError("gen: random-helly-small requires n <= 16 (subset oracle cap)");
        int attempts = 0;
        res.graph = make_random_helly_small(spec.sizes[0], spec.seed, &attempts);
        res.expected_helly = true;
        res.note = "verified by the subset oracle after " + std::to_string(attempts) +
                   " attempt(s)";
    } else {
        throw GraphError("gen: unknown family '" + spec.family + "'");
    }
    return res;
}

}  // namespace helly

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "helly/graph.hpp"

namespace helly {

// Seeded instance families. sizes semantics per family:
//   path: {n}                      random-tree: {n}
//   king-grid: {rows, cols}        rect-grid: {rows, cols}
//   block-graph: {blocks, block_size}
//   cone: {n}                      (apex over a random tree on n-1 vertices)
//   strong-product: {n1, n2}       (strong product of two random trees)
//   random-helly-small: {n}        (rejection sampling through the subset oracle)
struct GenSpec {
    std::string family;
    std::vector<int> sizes;
    std::uint64_t seed = 0;
};

struct GenResult {
    Graph graph;
    bool expected_helly = false;
    std::optional<int> gamma_lower_bound;  // set when a rectilinear grid is embedded
    std::string note;                      // why the family is (or is not) Helly
};

GenResult gen(const GenSpec& spec);

// Strong product (Chebyshev adjacency of the factor coordinates).
Graph strong_product(const Graph& a, const Graph& b);

std::vector<std::string> known_families();

}  // namespace helly

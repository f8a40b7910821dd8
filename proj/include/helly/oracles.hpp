#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "helly/graph.hpp"

namespace helly {

// An enumeration-based oracle was asked to run above its configured size cap.
struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EccentricityTable {
    std::vector<int> ecc;
    int rad = 0;
    int diam = 0;
    VertexSet center;

    bool operator==(const EccentricityTable&) const = default;
};

// Derives rad/diam/center from a full eccentricity array.
EccentricityTable make_table(std::vector<int> ecc);

// n independent BFS runs; the reference for every fast algorithm.
// threads > 1 partitions the sources; results are identical for any count.
EccentricityTable all_ecc_bruteforce(const Graph& g, int threads = 1);

// dm[u] = bfs(g,u) for every u.
std::vector<DistanceVector> distance_matrix(const Graph& g, int threads = 1);

struct SubsetEccReport {
    VertexSet m;
    std::vector<int> ecc_m;  // e_M(v) for all v in V
    int rad_m = 0;
    int diam_m = 0;          // max over v in M of e_M(v)
    VertexSet center_m;
};

SubsetEccReport subset_ecc(const Graph& g, const VertexSet& m,
                           const std::vector<DistanceVector>& dm);

struct HellyVerdict {
    bool helly = false;
    VertexSet witness;  // violating M when not helly
};

// Checks rad_M = floor((diam_M+1)/2) over every nonempty subset M.
HellyVerdict helly_check_subsets(const Graph& g, int cap = 16);

struct EqualRadiiVerdict {
    bool pass = false;
    VertexSet witness;  // pairwise-close family with empty common k-ball
};

// Helly property for the balls of fixed radius k: every maximal set of
// vertices pairwise within 2k has a common vertex within k of all of them.
EqualRadiiVerdict helly_check_equal_radii(const Graph& g, int k, int cap = 16);

struct UnimodalityVerdict {
    bool pass = false;
    int stuck_vertex = -1;  // non-central vertex with no strictly better neighbor
};

UnimodalityVerdict unimodality_check(const Graph& g, const EccentricityTable& t);

// e(v) = d(v, C(G)) + rad for all v.
bool center_formula_check(const Graph& g, const EccentricityTable& t);

// Subgraph induced by the center is connected and isometric in G.
bool center_isometry_check(const Graph& g, const EccentricityTable& t);

struct HyperbolicityResult {
    int two_delta = 0;            // delta stored as 2*delta, always an integer
    std::array<int, 4> witness{}; // lexicographically smallest attaining quadruple
};

HyperbolicityResult hyperbolicity_exact(const Graph& g, int cap = 150);

struct BetaWitness {
    int v = -1, r = -1, x = -1, y = -1, z = -1;
};

struct BetaResult {
    int beta = 0;
    std::optional<BetaWitness> witness;  // empty when all balls are convex
};

BetaResult pseudoconvexity_beta(const Graph& g, int cap = 40);

struct KappaResult {
    int kappa = 0;
    VertexSet witness_m;
    // Center diameter is measured with global distances; the induced
    // subgraph diameter is recomputed as a cross-check. A mismatch is
    // evidence of a non-Helly input, not an assertion failure.
    bool isometry_mismatch = false;
    VertexSet mismatch_m;
};

KappaResult kappa_exact(const Graph& g, int cap = 14);

struct ParamReport {
    int two_delta = 0;
    int beta = 0;
    std::optional<int> kappa;
    std::vector<std::pair<std::string, bool>> verdicts;
    bool all_pass = true;
};

// Inequality verdicts among delta/beta/kappa plus the sqrt(n) bounds and the
// center-diameter bounds. Meaningful on graphs certified Helly.
ParamReport parameter_inequality_report(const Graph& g, int two_delta, int beta,
                                        std::optional<int> kappa,
                                        const EccentricityTable& t);

}  // namespace helly

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helly/graph.hpp"
#include "helly/oracles.hpp"

namespace helly {

// A structural guarantee of the Helly analysis failed at runtime. The fast
// algorithms carry no correctness contract on non-Helly inputs; instead of
// returning silently wrong output they raise this with the failing stage.
struct NotHellyError : std::runtime_error {
    explicit NotHellyError(const std::string& stage, const std::string& detail)
        : std::runtime_error("structural failure at stage '" + stage + "': " + detail),
          stage(stage) {}
    std::string stage;
};

// One group of the merge process: a nonempty vertex set Z that is the
// intersection of the constraint balls indexed by X (indices into a
// caller-owned constraint universe).
struct Group {
    VertexSet z;
    std::vector<int> xs;  // sorted, nonempty
};

struct GroupSystem {
    std::vector<Group> groups;
    int step = 0;
};

// One merge round: next_sets[t] is the one-step growth of groups[t]
// (supplied by the caller). Repeatedly selects the vertex u contained in the
// most remaining sets (ties: smallest id), emits the intersection of exactly
// those sets with the union of their X's, and removes them. The result keeps
// groups nonempty and pairwise disjoint, with the X's still covering the
// universe.
GroupSystem expand_and_merge(const GroupSystem& sys, const std::vector<VertexSet>& next_sets);

struct ThresholdEcc {
    // ecc[v] = e(v) when e(v) <= k, else -1.
    std::vector<int> ecc;
    int rad = -1;        // -1 when no vertex of eccentricity <= k exists
    VertexSet center;    // C(G) when rad >= 0
    bool empty() const { return rad < 0; }
};

// All vertices of eccentricity at most k, with their eccentricities.
// Grows one ball per vertex in lockstep and merges groups of identical
// intersections; the first step producing a single group pins the radius
// and the center, after which the single group grows by closed neighborhood
// and a vertex entering at step l has e(v)=l.
ThresholdEcc ecc_at_most_k(const Graph& g, int k, bool debug_invariants = false);

struct DescendResult {
    bool central = false;
    int vertex = -1;  // v itself when central, else the improving neighbor
    int ecc = -1;     // e(vertex)
};

// Either certifies v central (no neighbor improves; on Helly inputs local
// minima are global) or returns the smallest-id neighbor u with e(u) < e(v).
DescendResult descend_step(const Graph& g, int v, const DistanceVector& dist_row);

struct ApproxCenter {
    int vertex = -1;
    int ecc = -1;
};

// Iterated double sweep. Works on any graph; on a delta-hyperbolic graph the
// returned vertex has eccentricity at most rad(G) + 2*delta.
ApproxCenter approx_center(const Graph& g);

struct CenterResult {
    int vertex = -1;
    int radius = -1;
};

// approx_center followed by certified descent; e(vertex) = rad(G) on Helly
// inputs.
CenterResult find_center(const Graph& g);

// e(v) = rad + d(v, C) for all v; one multi-source BFS.
EccentricityTable ecc_from_center(const Graph& g, const VertexSet& center, int rad);

// Deterministic all-eccentricities algorithm for Helly graphs, subquadratic
// via a small band layer and distant gates when the radius is large.
EccentricityTable all_ecc_sqrt(const Graph& g, bool debug_invariants = false);

struct Phase1Result {
    // groups[t].z = C_t (a subset of the first layer around S_k),
    // groups[t].xs = B_t as indices into a_set.
    std::vector<Group> groups;
    VertexSet a_set;  // A_{k,i}, the layer at distance r-i from S_k
};

// First phase of center extraction for fixed (k,i): refines singleton groups
// of A_{k,i} down the layers of S_k until they reach the first layer.
Phase1Result phase1_partition(const Graph& g, int c, int k, int i, int r,
                              const DistanceVector& d_sk, bool debug_invariants = false);

// Second phase: grows the phase-1 groups under the constraint system
// A_{k,i} (radius r) plus c (radius k+i+2); when a single group remains its
// intersection with S_k is S_{k,i} = { s in S_k : A_{k,i} within N^r[s] }.
VertexSet phase2_filter(const Graph& g, const Phase1Result& phase1, int c, int k, int i,
                        int r, const VertexSet& s_k, bool debug_invariants = false);

// C(G) intersected with N^k[c], for a central vertex c with e(c) = r.
VertexSet extract_center(const Graph& g, int c, int k, int r,
                         bool debug_invariants = false);

// Parameterized all-eccentricities algorithm. known_two_delta, when given,
// must be >= 2*delta(G) (a too-small value is NOT detected); otherwise a
// doubling search over k finds the full center.
EccentricityTable all_ecc_hyperbolic(const Graph& g,
                                     std::optional<int> known_two_delta = std::nullopt,
                                     bool debug_invariants = false);

}  // namespace helly

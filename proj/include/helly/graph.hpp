#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace helly {

// Sorted ascending list of vertex ids.
using VertexSet = std::vector<int>;

// Hop counts indexed by vertex id, produced by bfs / multi_source_bfs.
using DistanceVector = std::vector<int>;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable simple undirected connected graph in compressed adjacency form.
// Vertices are 0..n-1; neighbor lists are sorted ascending. Safe to share
// across threads after construction; there is no mutation API.
class Graph {
public:
    // Default-constructed placeholder with no vertices; every usable Graph
    // comes from from_edges or load_graph.
    Graph() = default;

    // Validates simplicity, symmetry and connectivity. Edges are given as
    // unordered pairs over 0..n-1.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int num_vertices() const { return n_; }
    long num_edges() const { return m_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    bool has_edge(int u, int v) const;

    std::vector<std::pair<int, int>> edges() const;

private:
    int n_ = 0;
    long m_ = 0;
    std::vector<long> offsets_;
    std::vector<int> adj_;
};

// Parses the edge-list text format: one "u v" pair per line, whitespace
// separated decimal integers, '#' starts a comment line. Input ids are
// compacted to 0..n-1 in order of first appearance. Rejects self-loops,
// duplicate edges (naming the offending line) and disconnected graphs
// (naming an unreached vertex, in input ids).
Graph load_graph(const std::string& text);

// Inverse of load_graph up to id remapping: one edge per line, "u v\n".
std::string to_edge_list(const Graph& g);

DistanceVector bfs(const Graph& g, int s);

// dist[v] = min over s in S of d(v,s). S must be nonempty.
DistanceVector multi_source_bfs(const Graph& g, const VertexSet& s);

// result[i] = { v : d(v,S) = i }; result[0] = S.
std::vector<VertexSet> layers(const Graph& g, const VertexSet& s);

// N^r[v] = { u : d(u,v) <= r }.
VertexSet ball(const Graph& g, int v, int r);

// I(x,y) = { w : d(x,w) + d(w,y) = d(x,y) }.
VertexSet interval(const Graph& g, int x, int y);

// L(v,j,S) = { u : d(v,u) = j and d(v,u) + d(u,S) = d(v,S) }.
// dS = multi_source_bfs(g,S), dv = bfs(g,v). Out-of-range j gives {}.
VertexSet slice(const Graph& g, int v, int j, const DistanceVector& d_s,
                const DistanceVector& d_v);

struct Projection {
    VertexSet pr;   // vertices of L closest to a
    int dist = 0;   // d(a,L)
};

// rows[idx] must be bfs(g, l[idx]) for every idx.
Projection projection(const Graph& g, int a, const VertexSet& l,
                      const std::vector<DistanceVector>& rows);

// Sorted-set helpers used throughout.
bool set_contains(const VertexSet& s, int v);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);

}  // namespace helly

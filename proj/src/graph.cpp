#include "helly/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace helly {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw GraphError("graph must have at least one vertex");
    Graph g;
    g.n_ = n;
    g.m_ = static_cast<long>(edges.size());
    std::vector<int> deg(n, 0);
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge endpoint out of range");
        if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
        std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                            static_cast<std::uint32_t>(std::max(u, v));
        if (!seen.insert(key).second)
            throw GraphError("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        deg[u]++;
        deg[v]++;
    }
    g.offsets_.assign(n + 1, 0);
    for (int v = 0; v < n; v++) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(2 * edges.size());
    std::vector<long> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    for (int v = 0; v < n; v++) {
        auto nb = g.adj_.begin() + g.offsets_[v];
        std::sort(nb, g.adj_.begin() + g.offsets_[v + 1]);
    }
    // Connectivity check; single BFS from vertex 0 must reach everything.
    DistanceVector d = bfs(g, 0);
    for (int v = 0; v < n; v++)
        if (d[v] < 0)
            throw GraphError("graph is disconnected: vertex " + std::to_string(v) +
                             " is not reachable from vertex " + std::to_string(0));
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; u++)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph load_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::unordered_map<long, int> remap;
    std::vector<long> original_id;
    std::vector<std::pair<int, int>> edges;
    std::unordered_set<std::uint64_t> seen;
    auto intern = [&](long id) {
        auto it = remap.find(id);
        if (it != remap.end()) return it->second;
        int v = static_cast<int>(original_id.size());
        remap.emplace(id, v);
        original_id.push_back(id);
        return v;
    };
    while (std::getline(in, line)) {
        line_no++;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::istringstream ls(line);
        long a, b;
        if (!(ls >> a >> b) || a < 0 || b < 0)
            throw GraphError("line " + std::to_string(line_no) + ": expected \"u v\" with u,v >= 0");
        std::string rest;
        if (ls >> rest)
            throw GraphError("line " + std::to_string(line_no) + ": trailing tokens");
        if (a == b)
            throw GraphError("line " + std::to_string(line_no) + ": self-loop at " + std::to_string(a));
        int u = intern(a), v = intern(b);
        std::uint64_t key = (static_cast<std::uint64_t>(std::min(u, v)) << 32) |
                            static_cast<std::uint32_t>(std::max(u, v));
        if (!seen.insert(key).second)
            throw GraphError("line " + std::to_string(line_no) + ": duplicate edge " +
                             std::to_string(a) + " " + std::to_string(b));
        edges.emplace_back(u, v);
    }
    if (original_id.empty()) throw GraphError("empty graph");
    try {
        return Graph::from_edges(static_cast<int>(original_id.size()), edges);
    } catch (const GraphError& e) {
        // Re-raise connectivity failures with the original vertex id.
        std::string msg = e.what();
        auto pos = msg.find("disconnected");
        if (pos != std::string::npos) {
            DistanceVector seen_from_0;
            // Identify some unreached vertex in input ids.
            // Rebuild adjacency without the connectivity check.
            std::vector<std::vector<int>> adj(original_id.size());
            for (auto [u, v] : edges) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
            std::vector<char> reached(original_id.size(), 0);
            std::queue<int> q;
            q.push(0);
            reached[0] = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int v : adj[u])
                    if (!reached[v]) {
                        reached[v] = 1;
                        q.push(v);
                    }
            }
            for (size_t v = 0; v < reached.size(); v++)
                if (!reached[v])
                    throw GraphError("graph is disconnected: vertex " +
                                     std::to_string(original_id[v]) + " is not reachable from " +
                                     std::to_string(original_id[0]));
        }
        throw;
    }
}

std::string to_edge_list(const Graph& g) {
    std::string out;
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

DistanceVector bfs(const Graph& g, int s) {
    DistanceVector dist(g.num_vertices(), -1);
    std::vector<int> queue;
    queue.reserve(g.num_vertices());
    dist[s] = 0;
    queue.push_back(s);
    for (size_t head = 0; head < queue.size(); head++) {
        int u = queue[head];
        int du = dist[u];
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = du + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

DistanceVector multi_source_bfs(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw GraphError("multi_source_bfs: empty source set");
    DistanceVector dist(g.num_vertices(), -1);
    std::vector<int> queue;
    queue.reserve(g.num_vertices());
    for (int v : s) {
        dist[v] = 0;
        queue.push_back(v);
    }
    for (size_t head = 0; head < queue.size(); head++) {
        int u = queue[head];
        int du = dist[u];
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = du + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::vector<VertexSet> layers(const Graph& g, const VertexSet& s) {
    DistanceVector dist = multi_source_bfs(g, s);
    int max_d = *std::max_element(dist.begin(), dist.end());
    std::vector<VertexSet> out(max_d + 1);
    for (int v = 0; v < g.num_vertices(); v++) out[dist[v]].push_back(v);
    return out;
}

VertexSet ball(const Graph& g, int v, int r) {
    DistanceVector dist = bfs(g, v);
    VertexSet out;
    for (int u = 0; u < g.num_vertices(); u++)
        if (dist[u] <= r) out.push_back(u);
    return out;
}

VertexSet interval(const Graph& g, int x, int y) {
    DistanceVector dx = bfs(g, x);
    DistanceVector dy = bfs(g, y);
    int d = dx[y];
    VertexSet out;
    for (int w = 0; w < g.num_vertices(); w++)
        if (dx[w] + dy[w] == d) out.push_back(w);
    return out;
}

VertexSet slice(const Graph& g, int v, int j, const DistanceVector& d_s,
                const DistanceVector& d_v) {
    VertexSet out;
    for (int u = 0; u < g.num_vertices(); u++)
        if (d_v[u] == j && d_v[u] + d_s[u] == d_s[v]) out.push_back(u);
    return out;
}

Projection projection(const Graph& g, int a, const VertexSet& l,
                      const std::vector<DistanceVector>& rows) {
    if (l.empty()) throw GraphError("projection: empty target set");
    (void)g;
    int best = rows[0][a];
    for (size_t i = 1; i < l.size(); i++) best = std::min(best, rows[i][a]);
    Projection p;
    p.dist = best;
    for (size_t i = 0; i < l.size(); i++)
        if (rows[i][a] == best) p.pr.push_back(l[i]);
    return p;
}

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace helly

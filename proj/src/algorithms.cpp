#include "helly/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_map>

namespace helly {

namespace {

int ceil_sqrt(int n) {
    int s = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (s * s < n) s++;
    while (s > 0 && (s - 1) * (s - 1) >= n) s--;
    return s;
}

int argmax_smallest(const std::vector<int>& values) {
    int best = 0;
    for (int v = 1; v < static_cast<int>(values.size()); v++)
        if (values[v] > values[best]) best = v;
    return best;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& z) {
    VertexSet out = z;
    for (int v : z)
        for (int u : g.neighbors(v)) out.push_back(u);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

GroupSystem expand_and_merge(const GroupSystem& sys, const std::vector<VertexSet>& next_sets) {
    const int q = static_cast<int>(sys.groups.size());
    for (int t = 0; t < q; t++)
        if (next_sets[t].empty())
            throw NotHellyError("expand_and_merge",
                                "empty growth set for group " + std::to_string(t) +
                                    " (not Helly or caller bug)");

    // Membership counts and an inverted index vertex -> containing sets.
    std::unordered_map<int, int> cnt;
    std::unordered_map<int, std::vector<int>> containing;
    for (int t = 0; t < q; t++)
        for (int v : next_sets[t]) {
            cnt[v]++;
            containing[v].push_back(t);
        }

    // Buckets by count, ordered by vertex id for deterministic pivoting.
    // Counts only decrease, so stale entries are re-filed lazily on pop.
    std::vector<std::set<int>> bucket(q + 1);
    for (auto& [v, c] : cnt) bucket[c].insert(v);

    GroupSystem out;
    out.step = sys.step + 1;
    std::vector<char> alive(q, 1);
    int alive_count = q;
    std::vector<int> occ;  // scratch: occurrences among selected sets

    for (int c = q; c >= 1 && alive_count > 0; c--) {
        while (!bucket[c].empty()) {
            int u = *bucket[c].begin();
            bucket[c].erase(bucket[c].begin());
            int actual = cnt[u];
            if (actual != c) {
                if (actual > 0) bucket[actual].insert(u);
                continue;
            }
            std::vector<int> selected;
            for (int t : containing[u])
                if (alive[t]) selected.push_back(t);
            // Intersection via membership counting over the selected sets.
            std::unordered_map<int, int> sel_cnt;
            for (int t : selected)
                for (int v : next_sets[t]) sel_cnt[v]++;
            Group ng;
            for (int v : next_sets[selected.front()])
                if (sel_cnt[v] == static_cast<int>(selected.size())) ng.z.push_back(v);
            for (int t : selected) {
                std::vector<int> merged;
                std::set_union(ng.xs.begin(), ng.xs.end(), sys.groups[t].xs.begin(),
                               sys.groups[t].xs.end(), std::back_inserter(merged));
                ng.xs = std::move(merged);
            }
            out.groups.push_back(std::move(ng));
            for (int t : selected) {
                alive[t] = 0;
                alive_count--;
                for (int v : next_sets[t]) cnt[v]--;
            }
        }
    }
    return out;
}

ThresholdEcc ecc_at_most_k(const Graph& g, int k, bool debug_invariants) {
    if (k < 0) throw GraphError("ecc_at_most_k: negative threshold");
    const int n = g.num_vertices();
    ThresholdEcc res;
    res.ecc.assign(n, -1);
    if (n == 1) {
        res.ecc[0] = 0;
        res.rad = 0;
        res.center = {0};
        return res;
    }

    GroupSystem sys;
    sys.groups.reserve(n);
    for (int v = 0; v < n; v++) sys.groups.push_back(Group{{v}, {v}});

    VertexSet z;           // the single group, once it appears
    VertexSet frontier;    // vertices added to z at the previous step
    std::vector<char> in_z(n, 0);

    for (int step = 1; step <= k; step++) {
        if (res.rad < 0) {
            std::vector<VertexSet> next(sys.groups.size());
            for (size_t t = 0; t < sys.groups.size(); t++)
                next[t] = closed_neighborhood(g, sys.groups[t].z);
            sys = expand_and_merge(sys, next);
            if (debug_invariants) {
                for (const Group& grp : sys.groups) {
                    VertexSet expect;
                    bool first = true;
                    for (int x : grp.xs) {
                        VertexSet b = ball(g, x, step);
                        expect = first ? b : set_intersect(expect, b);
                        first = false;
                    }
                    if (expect != grp.z)
                        throw NotHellyError("ecc_at_most_k/debug",
                                            "group is not the intersection of its balls");
                }
            }
            if (sys.groups.size() == 1) {
                res.rad = step;
                z = sys.groups.front().z;
                res.center = z;
                frontier = z;
                for (int v : z) {
                    in_z[v] = 1;
                    res.ecc[v] = step;
                }
            }
        } else {
            // Single group grows by closed neighborhood; entrants at this
            // step have eccentricity exactly step.
            VertexSet added;
            for (int v : frontier)
                for (int u : g.neighbors(v))
                    if (!in_z[u]) {
                        in_z[u] = 1;
                        added.push_back(u);
                    }
            std::sort(added.begin(), added.end());
            for (int v : added) res.ecc[v] = step;
            frontier = std::move(added);
            if (frontier.empty()) break;
        }
    }
    return res;
}

namespace {

// BFS from u that aborts as soon as some vertex reaches distance bound.
// Returns e(u) when e(u) < bound, else -1.
int bounded_ecc(const Graph& g, int u, int bound) {
    if (bound <= 0) return -1;
    DistanceVector dist(g.num_vertices(), -1);
    std::vector<int> queue;
    dist[u] = 0;
    queue.push_back(u);
    int max_d = 0;
    for (size_t head = 0; head < queue.size(); head++) {
        int x = queue[head];
        int dx = dist[x];
        for (int y : g.neighbors(x))
            if (dist[y] < 0) {
                dist[y] = dx + 1;
                if (dx + 1 >= bound) return -1;
                max_d = std::max(max_d, dx + 1);
                queue.push_back(y);
            }
    }
    return max_d;
}

}  // namespace

DescendResult descend_step(const Graph& g, int v, const DistanceVector& dist_row) {
    int ev = *std::max_element(dist_row.begin(), dist_row.end());
    for (int u : g.neighbors(v)) {
        int eu = bounded_ecc(g, u, ev);
        if (eu >= 0) return {false, u, eu};
    }
    return {true, v, ev};
}

ApproxCenter approx_center(const Graph& g) {
    const int n = g.num_vertices();
    int c = 0;
    DistanceVector dc = bfs(g, c);
    int ec = *std::max_element(dc.begin(), dc.end());
    for (int iter = 0; iter < n; iter++) {
        int u = argmax_smallest(dc);
        DistanceVector du = bfs(g, u);
        int w = argmax_smallest(du);
        int d = du[w];
        // Midpoint of a shortest u-w path at distance floor(d/2) from u,
        // descending from w over smallest-id predecessors.
        int cur = w;
        while (du[cur] > d / 2) {
            for (int nb : g.neighbors(cur))
                if (du[nb] == du[cur] - 1) {
                    cur = nb;
                    break;  // neighbor lists are sorted, so this is the smallest id
                }
        }
        DistanceVector dmid = bfs(g, cur);
        int em = *std::max_element(dmid.begin(), dmid.end());
        if (em < ec) {
            c = cur;
            ec = em;
            dc = std::move(dmid);
        } else {
            break;
        }
    }
    return {c, ec};
}

CenterResult find_center(const Graph& g) {
    int c = approx_center(g).vertex;
    for (;;) {
        DistanceVector dist = bfs(g, c);
        DescendResult step = descend_step(g, c, dist);
        if (step.central) return {c, step.ecc};
        c = step.vertex;
    }
}

EccentricityTable ecc_from_center(const Graph& g, const VertexSet& center, int rad) {
    DistanceVector dc = multi_source_bfs(g, center);
    std::vector<int> ecc(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); v++) ecc[v] = rad + dc[v];
    return make_table(std::move(ecc));
}

EccentricityTable all_ecc_sqrt(const Graph& g, bool debug_invariants) {
    const int n = g.num_vertices();
    const int s = ceil_sqrt(n);
    auto [c, r] = find_center(g);

    if (r <= 5 * s + 6) {
        ThresholdEcc th = ecc_at_most_k(g, 10 * s + 12, debug_invariants);
        for (int v = 0; v < n; v++)
            if (th.ecc[v] < 0)
                throw NotHellyError("sqrt/threshold",
                                    "vertex above the diameter bound for Helly inputs");
        return make_table(th.ecc);
    }

    VertexSet big_s = ball(g, c, 2 * s + 3);
    DistanceVector d_s = multi_source_bfs(g, big_s);
    int max_layer = *std::max_element(d_s.begin(), d_s.end());
    int band_hi = r - 4 * s - 6;
    if (band_hi < 1 || band_hi >= max_layer)
        throw NotHellyError("sqrt/layers", "layer structure inconsistent with the radius");

    std::vector<int> layer_size(max_layer + 1, 0);
    for (int v = 0; v < n; v++) layer_size[d_s[v]]++;
    int band_idx = 1;
    for (int i = 2; i <= band_hi; i++)
        if (layer_size[i] < layer_size[band_idx]) band_idx = i;
    if (layer_size[band_idx] > s)
        throw NotHellyError("sqrt/band-layer", "no band layer of size <= ceil(sqrt(n))");

    VertexSet band;  // the small layer L
    for (int v = 0; v < n; v++)
        if (d_s[v] == band_idx) band.push_back(v);

    std::vector<DistanceVector> rows(band.size());
    for (size_t i = 0; i < band.size(); i++) rows[i] = bfs(g, band[i]);

    VertexSet far_zone;  // A
    for (int v = 0; v < n; v++)
        if (d_s[v] > band_hi) far_zone.push_back(v);

    std::vector<int> dist_to_band(far_zone.size());
    std::vector<int> gate_values;  // I_A
    for (size_t ai = 0; ai < far_zone.size(); ai++) {
        int best = rows[0][far_zone[ai]];
        for (size_t u = 1; u < band.size(); u++)
            best = std::min(best, rows[u][far_zone[ai]]);
        dist_to_band[ai] = best;
        gate_values.push_back(best);
    }
    std::sort(gate_values.begin(), gate_values.end());
    gate_values.erase(std::unique(gate_values.begin(), gate_values.end()), gate_values.end());

    // p(u,i) = |N^{r-i}[u] cap S| by counting sort over distance values.
    std::vector<std::vector<long>> p(band.size(),
                                     std::vector<long>(gate_values.size(), 0));
    {
        std::vector<long> by_dist(n + 2, 0);
        for (size_t u = 0; u < band.size(); u++) {
            std::fill(by_dist.begin(), by_dist.end(), 0);
            for (int v : big_s) by_dist[rows[u][v]]++;
            for (int d = 1; d <= n + 1; d++) by_dist[d] += by_dist[d - 1];  // prefix
            for (size_t gi = 0; gi < gate_values.size(); gi++) {
                int thr = r - gate_values[gi];
                p[u][gi] = thr < 0 ? 0 : by_dist[std::min(thr, n + 1)];
            }
        }
    }

    // Distant gate per far vertex: the projection member whose shrunken ball
    // captures the most of S; q(u) tracks the deepest assignment per u.
    std::vector<int> q(band.size(), 0);
    for (size_t ai = 0; ai < far_zone.size(); ai++) {
        int i = dist_to_band[ai];
        int gi = static_cast<int>(std::lower_bound(gate_values.begin(), gate_values.end(), i) -
                                  gate_values.begin());
        int gate = -1;
        long best_p = -1;
        for (size_t u = 0; u < band.size(); u++)
            if (rows[u][far_zone[ai]] == i && p[u][gi] > best_p) {
                best_p = p[u][gi];
                gate = static_cast<int>(u);
            }
        q[gate] = std::max(q[gate], i);
        if (debug_invariants) {
            DistanceVector da = bfs(g, far_zone[ai]);
            long direct = 0, via_gate = 0;
            for (int v : big_s) {
                if (da[v] <= r) direct++;
                if (rows[gate][v] <= r - i) via_gate++;
            }
            if (direct != via_gate)
                throw NotHellyError("sqrt/debug-gate",
                                    "distant gate does not capture N^r[a] within S");
        }
    }

    VertexSet center;
    for (int v : big_s) {
        bool ok = true;
        for (size_t u = 0; u < band.size() && ok; u++)
            if (rows[u][v] > r - q[u]) ok = false;
        if (ok) center.push_back(v);
    }
    if (center.empty())
        throw NotHellyError("sqrt/center-empty", "gate constraints eliminated every candidate");
    return ecc_from_center(g, center, r);
}

Phase1Result phase1_partition(const Graph& g, int c, int k, int i, int r,
                              const DistanceVector& d_sk, bool debug_invariants) {
    (void)c;
    (void)k;
    const int n = g.num_vertices();
    const int target = r - i;  // layer index of A_{k,i}
    Phase1Result res;
    for (int v = 0; v < n; v++)
        if (d_sk[v] == target) res.a_set.push_back(v);
    if (res.a_set.empty()) return res;

    GroupSystem sys;
    for (size_t b = 0; b < res.a_set.size(); b++)
        sys.groups.push_back(Group{{res.a_set[b]}, {static_cast<int>(b)}});

    for (int j = 0; j < target - 1; j++) {
        int next_layer = target - (j + 1);
        std::vector<VertexSet> next(sys.groups.size());
        for (size_t t = 0; t < sys.groups.size(); t++) {
            VertexSet w;
            for (int v : sys.groups[t].z)
                for (int u : g.neighbors(v))
                    if (d_sk[u] == next_layer) w.push_back(u);
            std::sort(w.begin(), w.end());
            w.erase(std::unique(w.begin(), w.end()), w.end());
            next[t] = std::move(w);
        }
        sys = expand_and_merge(sys, next);
        if (debug_invariants) {
            for (const Group& grp : sys.groups) {
                VertexSet expect;
                bool first = true;
                for (int bi : grp.xs) {
                    int b = res.a_set[bi];
                    VertexSet sl = slice(g, b, j + 1, d_sk, bfs(g, b));
                    expect = first ? sl : set_intersect(expect, sl);
                    first = false;
                }
                if (expect != grp.z)
                    throw NotHellyError("phase1/debug",
                                        "group differs from the slice intersection");
            }
        }
    }
    res.groups = sys.groups;
    return res;
}

VertexSet phase2_filter(const Graph& g, const Phase1Result& phase1, int c, int k, int i,
                        int r, const VertexSet& s_k, bool debug_invariants) {
    if (phase1.a_set.empty()) return s_k;  // no constraints

    const int c_idx = static_cast<int>(phase1.a_set.size());
    auto alpha = [&](int x_idx) { return x_idx == c_idx ? k + i + 2 : r; };
    auto x_vertex = [&](int x_idx) { return x_idx == c_idx ? c : phase1.a_set[x_idx]; };

    GroupSystem sys;
    for (const Group& grp : phase1.groups) {
        Group init;
        init.z = grp.z;
        init.xs = grp.xs;
        init.xs.push_back(c_idx);  // c belongs to every group: a covering, not a partition
        sys.groups.push_back(std::move(init));
    }

    for (int step = 0; step <= i; step++) {
        std::vector<VertexSet> next(sys.groups.size());
        for (size_t t = 0; t < sys.groups.size(); t++)
            next[t] = closed_neighborhood(g, sys.groups[t].z);
        sys = expand_and_merge(sys, next);
        if (debug_invariants) {
            for (const Group& grp : sys.groups) {
                VertexSet expect;
                bool first = true;
                for (int xi : grp.xs) {
                    VertexSet b = ball(g, x_vertex(xi), alpha(xi) - (i + 1) + (step + 1));
                    expect = first ? b : set_intersect(expect, b);
                    first = false;
                }
                if (expect != grp.z)
                    throw NotHellyError("phase2/debug",
                                        "group is not the intersection of its balls");
            }
        }
    }
    if (sys.groups.size() != 1) return {};  // defensive: cannot happen on Helly inputs
    return set_intersect(sys.groups.front().z, s_k);
}

VertexSet extract_center(const Graph& g, int c, int k, int r, bool debug_invariants) {
    if (k < 0) throw GraphError("extract_center: negative k");
    VertexSet s_k = ball(g, c, k);
    VertexSet result;
    if (r <= 2 * k) {
        ThresholdEcc th = ecc_at_most_k(g, r, debug_invariants);
        if (th.empty())
            throw NotHellyError("extract-center", "threshold run found no center up to r");
        result = set_intersect(th.center, s_k);
    } else {
        DistanceVector d_sk = multi_source_bfs(g, s_k);
        result = s_k;
        for (int i = k; i <= 2 * k - 1; i++) {
            Phase1Result p1 = phase1_partition(g, c, k, i, r, d_sk, debug_invariants);
            VertexSet s_ki = phase2_filter(g, p1, c, k, i, r, s_k, debug_invariants);
            result = set_intersect(result, s_ki);
        }
    }
    if (!set_contains(result, c))
        throw NotHellyError("extract-center", "result does not contain the central vertex");
    return result;
}

EccentricityTable all_ecc_hyperbolic(const Graph& g, std::optional<int> known_two_delta,
                                     bool debug_invariants) {
    auto [c, r] = find_center(g);
    VertexSet center;
    if (known_two_delta) {
        if (*known_two_delta < 0) throw GraphError("all_ecc_hyperbolic: negative delta");
        int k = *known_two_delta + 1;  // 2*delta + 1, already an integer
        center = extract_center(g, c, k, r, debug_invariants);
    } else {
        // Doubling search; stops at the first power-of-two k whose center
        // slice no longer grows from k to k+1, which by connectedness of the
        // center means the whole center has been captured.
        for (int k = 2;; k *= 2) {
            VertexSet at_k = extract_center(g, c, k, r, debug_invariants);
            VertexSet at_k1 = extract_center(g, c, k + 1, r, debug_invariants);
            if (at_k == at_k1) {
                center = std::move(at_k);
                break;
            }
            if (k > 2 * g.num_vertices())
                throw NotHellyError("hyperbolic/doubling", "center slice never stabilized");
        }
    }
    return ecc_from_center(g, center, r);
}

}  // namespace helly

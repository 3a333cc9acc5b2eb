#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

struct ReductionStep {
    int rule = 0; // 1..4
    std::vector<int> removed_vertices;
    std::vector<std::pair<int, int>> removed_edges;
    std::vector<std::pair<int, int>> added_edges;
    std::vector<int> forced_trackers;
};

// Ordered log of reduction applications. Vertex ids inside steps refer to the
// input instance; id_map sends each vertex of the reduced (compacted) instance
// back to its input id, enabling lift-back of solutions.
struct ReductionTrace {
    std::vector<ReductionStep> steps;
    std::vector<int> id_map; // new id -> old id

    std::vector<int> forced_trackers() const {
        std::vector<int> out;
        for (const auto& st : steps)
            out.insert(out.end(), st.forced_trackers.begin(), st.forced_trackers.end());
        std::sort(out.begin(), out.end());
        return out;
    }
};

namespace detail {

// Mutable working copy. Vertices are tombstoned during a pass and compacted
// once at the end, so every step is recorded in input ids.
struct Working {
    std::vector<std::vector<int>> adj;
    std::vector<char> alive;
    int s, t;
    std::vector<ReductionStep> steps;

    explicit Working(const Instance& inst)
        : adj(inst.graph.adj), alive(inst.graph.n, 1), s(inst.s), t(inst.t) {}

    int degree(int v) const { return int(adj[v].size()); }
    bool has_edge(int u, int v) const {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    }
    void erase_arc(int u, int v) {
        auto& a = adj[u];
        a.erase(std::lower_bound(a.begin(), a.end(), v));
    }
    void add_edge(int u, int v) {
        adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
    }
    void remove_vertex(int v, ReductionStep& st) {
        for (int w : adj[v]) {
            erase_arc(w, v);
            st.removed_edges.emplace_back(std::min(v, w), std::max(v, w));
        }
        adj[v].clear();
        alive[v] = 0;
        st.removed_vertices.push_back(v);
    }

    std::pair<Instance, std::vector<int>> compact() const {
        std::vector<int> id_map; // new -> old
        std::vector<int> to_new(adj.size(), -1);
        for (int v = 0; v < int(adj.size()); ++v)
            if (alive[v]) {
                to_new[v] = int(id_map.size());
                id_map.push_back(v);
            }
        Graph g(int(id_map.size()));
        for (int v = 0; v < int(adj.size()); ++v)
            if (alive[v])
                for (int w : adj[v])
                    if (v < w) g.add_edge(to_new[v], to_new[w]);
        return {Instance(std::move(g), to_new[s], to_new[t]), std::move(id_map)};
    }
};

// An edge or vertex participates in some s-t path iff its block lies on the
// block-cut-tree path between the blocks of s and t. Returns false when s and
// t are disconnected.
inline bool reduction1_once(Working& w) {
    int n = int(w.adj.size());
    Graph g(n);
    for (int v = 0; v < n; ++v)
        if (w.alive[v])
            for (int u : w.adj[v])
                if (v < u) g.add_edge(v, u);

    // connectivity of s and t first
    {
        std::vector<char> seen(n, 0);
        std::vector<int> stack{w.s};
        seen[w.s] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
        }
        if (!seen[w.t]) throw EmptyResult("no path between source and destination");
    }

    auto dec = biconnected_components(g);
    int nb = int(dec.blocks.size());

    // block-cut tree: nodes are blocks plus cut vertices
    std::vector<char> is_cut(n, 0);
    for (int v : dec.cut_vertices) is_cut[v] = 1;
    std::vector<std::vector<int>> block_of_vertex(n);
    for (int b = 0; b < nb; ++b) {
        std::vector<int> vs;
        for (auto [x, y] : dec.blocks[b]) {
            vs.push_back(x);
            vs.push_back(y);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs) block_of_vertex[v].push_back(b);
    }

    auto node_of = [&](int v) -> int {
        // tree node id: block b -> b, cut vertex v -> nb + v
        if (is_cut[v]) return nb + v;
        return block_of_vertex[v].empty() ? -1 : block_of_vertex[v][0];
    };
    int src = node_of(w.s), dst = node_of(w.t);
    if (src < 0 || dst < 0) throw EmptyResult("no path between source and destination");

    std::vector<std::vector<int>> tree(nb + n);
    for (int b = 0; b < nb; ++b) {
        std::vector<int> vs;
        for (auto [x, y] : dec.blocks[b]) {
            vs.push_back(x);
            vs.push_back(y);
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        for (int v : vs)
            if (is_cut[v]) {
                tree[b].push_back(nb + v);
                tree[nb + v].push_back(b);
            }
    }

    // path in the tree from src to dst
    std::vector<int> parent(nb + n, -2);
    std::vector<int> stack{src};
    parent[src] = -1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        if (u == dst) break;
        for (int v : tree[u])
            if (parent[v] == -2) {
                parent[v] = u;
                stack.push_back(v);
            }
    }
    std::vector<char> keep_block(nb, 0);
    for (int u = dst; u != -1; u = parent[u])
        if (u < nb) keep_block[u] = 1;

    std::vector<char> keep_vertex(n, 0);
    keep_vertex[w.s] = keep_vertex[w.t] = 1;
    ReductionStep st;
    st.rule = 1;
    // collect removals: edges not in kept blocks, vertices touching none
    std::vector<std::pair<int, int>> kept_edges;
    for (int b = 0; b < nb; ++b)
        if (keep_block[b])
            for (auto [x, y] : dec.blocks[b]) {
                keep_vertex[x] = keep_vertex[y] = 1;
                kept_edges.emplace_back(std::min(x, y), std::max(x, y));
            }
    std::sort(kept_edges.begin(), kept_edges.end());

    bool changed = false;
    for (int v = 0; v < n; ++v) {
        if (!w.alive[v]) continue;
        for (int u : std::vector<int>(w.adj[v])) {
            if (v > u) continue;
            if (!std::binary_search(kept_edges.begin(), kept_edges.end(),
                                    std::make_pair(v, u))) {
                w.erase_arc(v, u);
                w.erase_arc(u, v);
                st.removed_edges.emplace_back(v, u);
                changed = true;
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!w.alive[v]) continue;
        if (!keep_vertex[v]) {
            w.alive[v] = 0;
            st.removed_vertices.push_back(v);
            changed = true;
        }
    }
    if (changed) w.steps.push_back(std::move(st));
    return changed;
}

// One application of the adjacent degree-2 contraction. The rule touches only
// pairs of two non-terminal vertices (a terminal inside the pair makes the
// rule inapplicable there); the second vertex in scan order is removed and
// its neighbours are joined. After rule 1 the contraction can never create a
// parallel edge, so hitting one means rule 1 was skipped.
inline bool reduction2_once(Working& w) {
    int n = int(w.adj.size());
    for (int u = 0; u < n; ++u) {
        if (!w.alive[u] || u == w.s || u == w.t || w.degree(u) != 2) continue;
        for (int v : w.adj[u]) {
            if (v == w.s || v == w.t || w.degree(v) != 2) continue;
            int gone = std::max(u, v);
            int a = w.adj[gone][0], b = w.adj[gone][1];
            if (w.has_edge(a, b))
                throw PreconditionViolated("degree-2 contraction would create a parallel edge");
            ReductionStep st;
            st.rule = 2;
            w.remove_vertex(gone, st);
            w.add_edge(a, b);
            st.added_edges.emplace_back(std::min(a, b), std::max(a, b));
            w.steps.push_back(std::move(st));
            return true;
        }
    }
    return false;
}

// One application of: degree-2 non-terminal vertex in a triangle gets a
// tracker and disappears.
inline bool reduction3_once(Working& w) {
    int n = int(w.adj.size());
    for (int v = 0; v < n; ++v) {
        if (!w.alive[v] || v == w.s || v == w.t || w.degree(v) != 2) continue;
        int a = w.adj[v][0], b = w.adj[v][1];
        if (!w.has_edge(a, b)) continue;
        ReductionStep st;
        st.rule = 3;
        st.forced_trackers.push_back(v);
        w.remove_vertex(v, st);
        w.steps.push_back(std::move(st));
        return true;
    }
    return false;
}

// One application of: two non-adjacent non-terminal degree-2 vertices on a
// common 4-cycle (twins sharing both neighbors); the lower id gets the
// tracker and disappears.
inline bool reduction4_once(Working& w) {
    int n = int(w.adj.size());
    for (int u = 0; u < n; ++u) {
        if (!w.alive[u] || u == w.s || u == w.t || w.degree(u) != 2) continue;
        int a = w.adj[u][0], b = w.adj[u][1];
        for (int v : w.adj[a]) {
            if (v == u || v == w.s || v == w.t || w.degree(v) != 2) continue;
            if (w.adj[v][0] == std::min(a, b) && w.adj[v][1] == std::max(a, b)) {
                ReductionStep st;
                st.rule = 4;
                st.forced_trackers.push_back(std::min(u, v));
                w.remove_vertex(std::min(u, v), st);
                w.steps.push_back(std::move(st));
                return true;
            }
        }
    }
    return false;
}

inline std::pair<Instance, ReductionTrace> finish(Working& w) {
    auto [inst, id_map] = w.compact();
    ReductionTrace tr;
    tr.steps = std::move(w.steps);
    tr.id_map = std::move(id_map);
    return {std::move(inst), std::move(tr)};
}

} // namespace detail

// Remove every edge and vertex that participates in no s-t path.
inline std::pair<Instance, ReductionTrace> reduction1(const Instance& inst) {
    detail::Working w(inst);
    detail::reduction1_once(w);
    return detail::finish(w);
}

// Contract runs of adjacent degree-2 vertices until none remain.
inline std::pair<Instance, ReductionTrace> reduction2(const Instance& inst) {
    detail::Working w(inst);
    while (detail::reduction2_once(w)) {}
    return detail::finish(w);
}

// Force-track degree-2 vertices sitting in triangles until none remain.
inline std::pair<Instance, ReductionTrace> reduction3(const Instance& inst) {
    detail::Working w(inst);
    while (detail::reduction3_once(w)) {}
    return detail::finish(w);
}

// Force-track one of each pair of opposite degree-2 vertices on 4-cycles.
inline std::pair<Instance, ReductionTrace> reduction4(const Instance& inst) {
    detail::Working w(inst);
    while (detail::reduction4_once(w)) {}
    return detail::finish(w);
}

// Rule 1 once, then rules 2, 3, 4 scanned round-robin (restarting after each
// application) until no rule applies. Rule 1 never needs a second pass. The
// scan order of rules 2-4 is configurable because any order is sound; the
// default matches the documented 2, 3, 4 schedule.
inline std::pair<Instance, ReductionTrace> reduce_fully_order(const Instance& inst,
                                                              const std::vector<int>& order) {
    detail::Working w(inst);
    detail::reduction1_once(w);
    bool more = true;
    while (more) {
        more = false;
        for (int rule : order) {
            bool applied = rule == 2   ? detail::reduction2_once(w)
                           : rule == 3 ? detail::reduction3_once(w)
                                       : detail::reduction4_once(w);
            if (applied) {
                more = true;
                break;
            }
        }
    }
    return detail::finish(w);
}

inline std::pair<Instance, ReductionTrace> reduce_fully(const Instance& inst) {
    return reduce_fully_order(inst, {2, 3, 4});
}

// Lift a tracker set found on a reduced instance back to input ids and merge
// the forced trackers collected by the trace.
inline std::vector<int> lift_solution(const ReductionTrace& trace,
                                      const std::vector<int>& reduced_solution) {
    std::vector<int> out = trace.forced_trackers();
    for (int v : reduced_solution) out.push_back(trace.id_map[v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace trackpath

#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include "trackpath/graph.hpp"

namespace trackpath {

// Enumeration limits. The library is an exact, desk-scale toolkit; caps turn
// runaway inputs into CapExceeded instead of unbounded work.
struct Caps {
    std::size_t path_cap = 1'000'000;
    std::size_t cycle_cap = 1'000'000;
    std::size_t witness_cap = 50'000; // DFS nodes per disjoint-witness search
};

// All simple s-t paths in lexicographic order of their vertex sequences.
inline std::vector<VertexPath> enumerate_st_paths(const Instance& inst, std::size_t cap) {
    if (cap == 0) throw BadParameter("path cap must be positive");
    const Graph& g = inst.graph;
    std::vector<VertexPath> out;
    std::vector<int> path{inst.s};
    std::vector<char> used(g.n, 0);
    used[inst.s] = 1;

    struct Frame {
        int u;
        std::size_t next;
    };
    std::vector<Frame> stack{{inst.s, 0}};
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.u == inst.t) {
            if (out.size() == cap) throw CapExceeded("more than cap s-t paths");
            out.push_back(VertexPath{path});
            used[fr.u] = 0;
            path.pop_back();
            stack.pop_back();
            continue;
        }
        if (fr.next < g.adj[fr.u].size()) {
            int v = g.adj[fr.u][fr.next++];
            if (!used[v]) {
                used[v] = 1;
                path.push_back(v);
                stack.push_back({v, 0});
            }
        } else {
            used[fr.u] = 0;
            path.pop_back();
            stack.pop_back();
        }
    }
    return out;
}

// Streams every simple cycle exactly once, in canonical form, deterministic
// order. For each root vertex r (ascending) the cycles whose minimum vertex
// is r are emitted by a DFS restricted to vertices > r, closing back to r
// only when the second path vertex is smaller than the last (one orientation
// per cycle). The callback may return void, or bool where false stops the
// enumeration. Returns the number of cycles seen; throws CapExceeded past cap.
template <class F>
inline std::size_t for_each_simple_cycle(const Graph& g, std::size_t cap, F&& emit) {
    if (cap == 0) throw BadParameter("cycle cap must be positive");
    std::size_t count = 0;
    std::vector<int> path;
    std::vector<char> used(g.n, 0);

    auto fire = [&](const std::vector<int>& vs) -> bool {
        if constexpr (std::is_void_v<decltype(emit(vs))>) {
            emit(vs);
            return true;
        } else {
            return emit(vs);
        }
    };

    struct Frame {
        int u;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int r = 0; r < g.n; ++r) {
        path.assign(1, r);
        used[r] = 1;
        stack.assign(1, {r, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next < g.adj[fr.u].size()) {
                int v = g.adj[fr.u][fr.next++];
                if (v == r && path.size() >= 3 && path[1] < path.back()) {
                    if (count == cap) throw CapExceeded("more than cap simple cycles");
                    ++count;
                    if (!fire(path)) return count;
                } else if (v > r && !used[v]) {
                    used[v] = 1;
                    path.push_back(v);
                    stack.push_back({v, 0});
                }
            } else {
                used[fr.u] = 0;
                path.pop_back();
                stack.pop_back();
            }
        }
        used[r] = 0;
    }
    return count;
}

inline std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap) {
    std::vector<Cycle> out;
    for_each_simple_cycle(g, cap, [&](const std::vector<int>& vs) { out.push_back(Cycle{vs}); });
    return out;
}

// Streams, in the same canonical order, exactly the simple cycles that carry
// at most max_marked vertices of `marked`: the DFS never extends a path whose
// marked count is already over the limit, so the walk stays inside and near
// the unmarked regions. Cycles carrying more marked vertices are skipped;
// callers rely on them being tracked outright.
template <class F>
inline std::size_t for_each_low_marked_cycle(const Graph& g, const VertexSet& marked,
                                             int max_marked, std::size_t cap, F&& emit) {
    if (cap == 0) throw BadParameter("cycle cap must be positive");
    std::size_t count = 0;
    std::vector<int> path;
    std::vector<char> used(g.n, 0);

    auto fire = [&](const std::vector<int>& vs) -> bool {
        if constexpr (std::is_void_v<decltype(emit(vs))>) {
            emit(vs);
            return true;
        } else {
            return emit(vs);
        }
    };

    struct Frame {
        int u;
        std::size_t next;
    };
    std::vector<Frame> stack;
    for (int r = 0; r < g.n; ++r) {
        int cost = marked.test(r) ? 1 : 0;
        if (cost > max_marked) continue;
        path.assign(1, r);
        used[r] = 1;
        stack.assign(1, {r, 0});
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next < g.adj[fr.u].size()) {
                int v = g.adj[fr.u][fr.next++];
                if (v == r && path.size() >= 3 && path[1] < path.back()) {
                    if (count == cap) throw CapExceeded("more than cap low-tracker cycles");
                    ++count;
                    if (!fire(path)) return count;
                } else if (v > r && !used[v]) {
                    int c = marked.test(v) ? 1 : 0;
                    if (cost + c > max_marked) continue;
                    cost += c;
                    used[v] = 1;
                    path.push_back(v);
                    stack.push_back({v, 0});
                }
            } else {
                if (marked.test(fr.u)) --cost;
                used[fr.u] = 0;
                path.pop_back();
                stack.pop_back();
            }
        }
        used[r] = 0;
    }
    return count;
}

} // namespace trackpath

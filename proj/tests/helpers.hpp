#pragma once

// Shared fixtures for the unit suites: the tiny instances every module's
// examples refer to, plus a brute-force tracking check that is independent
// of the library's verifiers (path projections, computed the boring way).

#include <map>
#include <set>
#include <vector>

#include "trackpath/gen.hpp"
#include "trackpath/graph.hpp"
#include "trackpath/verify.hpp"

namespace fixtures {

using namespace trackpath;

// s=0, internal 1, t=2
inline Instance path3() {
    return Instance(from_edge_list(3, {{0, 1}, {1, 2}}), 0, 2);
}

// s=0, v=1, t=2, all pairwise adjacent
inline Instance triangle_svt() {
    return Instance(from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2);
}

// s=0, internals a=1, b=2, c=3, t=4; three parallel length-2 strands
inline Instance theta() {
    return Instance(from_edge_list(5, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}}), 0, 4);
}

// s=0, u=1, t=2, v=3 around a 4-cycle
inline Instance square() {
    return Instance(from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), 0, 2);
}

// every simple s-t path by brute force recursion (test-side oracle)
inline void all_paths_rec(const Graph& g, int u, int t, std::vector<int>& cur,
                          std::vector<char>& used, std::vector<std::vector<int>>& out) {
    if (u == t) {
        out.push_back(cur);
        return;
    }
    for (int v : g.adj[u]) {
        if (used[v]) continue;
        used[v] = 1;
        cur.push_back(v);
        all_paths_rec(g, v, t, cur, used, out);
        cur.pop_back();
        used[v] = 0;
    }
}

inline std::vector<std::vector<int>> all_paths(const Instance& inst) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{inst.s};
    std::vector<char> used(inst.graph.n, 0);
    used[inst.s] = 1;
    all_paths_rec(inst.graph, inst.s, inst.t, cur, used, out);
    return out;
}

// independent definition-level oracle: project every path on the set, demand
// pairwise distinct sequences
inline bool oracle_tracks(const Instance& inst, const std::vector<int>& members) {
    std::set<int> ts(members.begin(), members.end());
    std::set<std::vector<int>> seen;
    for (const auto& p : all_paths(inst)) {
        std::vector<int> seq;
        for (int v : p)
            if (ts.count(v)) seq.push_back(v);
        if (!seen.insert(seq).second) return false;
    }
    return true;
}

// smallest tracking set size by unrestricted subset search over all vertices
inline int oracle_opt_all_subsets(const Instance& inst) {
    int n = inst.graph.n;
    for (int k = 0; k <= n; ++k) {
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            if (oracle_tracks(inst, pick)) return k;
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return -1;
}

inline std::vector<int> sampled_subset(const Instance& inst, unsigned seed) {
    std::mt19937 rng(seed);
    int density = 1 + int(rng() % 3); // keep 1/4, 1/2 or 3/4 of vertices
    std::vector<int> members;
    for (int v = 0; v < inst.graph.n; ++v)
        if (rng() % 4 < unsigned(density)) members.push_back(v);
    return members;
}

} // namespace fixtures

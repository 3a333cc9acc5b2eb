#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "trackpath/bits.hpp"
#include "trackpath/errors.hpp"

namespace trackpath {

// Simple undirected graph over dense vertex ids 0..n-1.
// No self loops, no parallel edges; adjacency lists are kept sorted.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}

    int degree(int v) const { return int(adj[v].size()); }

    bool has_edge(int u, int v) const {
        const auto& a = adj[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    // Insertion keeping lists sorted; rejects loops and duplicates.
    void add_edge(int u, int v) {
        if (u == v) throw MalformedEdge(u, v, "self loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw MalformedEdge(u, v, "vertex id out of range");
        if (has_edge(u, v)) throw MalformedEdge(u, v, "duplicate edge");
        adj[u].insert(std::upper_bound(adj[u].begin(), adj[u].end(), v), v);
        adj[v].insert(std::upper_bound(adj[v].begin(), adj[v].end(), u), u);
        ++m;
    }

    void remove_edge(int u, int v) {
        auto erase_one = [](std::vector<int>& a, int x) {
            auto it = std::lower_bound(a.begin(), a.end(), x);
            a.erase(it);
        };
        erase_one(adj[u], v);
        erase_one(adj[v], u);
        --m;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(std::size_t(m));
        for (int u = 0; u < n; ++u)
            for (int v : adj[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw BadParameter("negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// A graph with a source and a destination.
struct Instance {
    Graph graph;
    int s = 0;
    int t = 0;

    Instance() = default;
    Instance(Graph g, int s_, int t_) : graph(std::move(g)), s(s_), t(t_) {
        if (s < 0 || s >= graph.n || t < 0 || t >= graph.n)
            throw BadParameter("source/destination out of range");
        if (s == t) throw BadParameter("source equals destination");
    }
};

// Simple path, all vertices distinct, consecutive vertices adjacent.
struct VertexPath {
    std::vector<int> vertices;
};

// Simple cycle in canonical form: smallest id first, then the rotation
// direction whose second element is smaller.
struct Cycle {
    std::vector<int> vertices;
};

inline Cycle canonical_cycle(std::vector<int> vs) {
    if (vs.size() < 3) throw BadParameter("cycle shorter than 3");
    auto mn = std::min_element(vs.begin(), vs.end());
    std::rotate(vs.begin(), mn, vs.end());
    if (vs[1] > vs.back()) {
        std::reverse(vs.begin() + 1, vs.end());
    }
    return Cycle{std::move(vs)};
}

inline std::vector<int> component_of(const Graph& g, int start) {
    std::vector<int> comp, stack{start};
    std::vector<char> seen(g.n, 0);
    seen[start] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        comp.push_back(u);
        for (int w : g.adj[u])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    return int(component_of(g, 0).size()) == g.n;
}

// Face count via Euler's formula m - n + 2. Only meaningful when the
// caller guarantees planarity; connectivity is checked.
inline int face_count(const Graph& g) {
    if (!is_connected(g)) throw Disconnected("face count needs a connected graph");
    return int(g.m) - g.n + 2;
}

struct BlockDecomposition {
    std::vector<std::vector<std::pair<int, int>>> blocks; // edge sets
    std::vector<int> cut_vertices;                        // sorted
};

// Standard biconnected component decomposition (iterative lowlink with an
// edge stack). Every edge lands in exactly one block; isolated vertices
// produce no block.
inline BlockDecomposition biconnected_components(const Graph& g) {
    BlockDecomposition out;
    std::vector<int> disc(g.n, -1), low(g.n, 0), parent(g.n, -1), child_count(g.n, 0);
    std::vector<char> is_cut(g.n, 0);
    std::vector<std::pair<int, int>> estack;
    int timer = 0;

    struct Frame {
        int u;
        std::size_t next;
    };

    for (int root = 0; root < g.n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        disc[root] = low[root] = timer++;
        while (!frames.empty()) {
            Frame& fr = frames.back();
            int u = fr.u;
            if (fr.next < g.adj[u].size()) {
                int v = g.adj[u][fr.next++];
                if (disc[v] == -1) {
                    estack.emplace_back(u, v);
                    parent[v] = u;
                    ++child_count[u];
                    disc[v] = low[v] = timer++;
                    frames.push_back({v, 0});
                } else if (v != parent[u] && disc[v] < disc[u]) {
                    estack.emplace_back(u, v);
                    low[u] = std::min(low[u], disc[v]);
                }
            } else {
                frames.pop_back();
                if (!frames.empty()) {
                    int p = frames.back().u;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] >= disc[p]) {
                        // pop the block rooted at edge (p, u)
                        std::vector<std::pair<int, int>> block;
                        while (true) {
                            auto e = estack.back();
                            estack.pop_back();
                            block.push_back(e);
                            if (e.first == p && e.second == u) break;
                        }
                        out.blocks.push_back(std::move(block));
                        if (parent[p] != -1 || child_count[p] >= 2) is_cut[p] = 1;
                    }
                }
            }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

} // namespace trackpath

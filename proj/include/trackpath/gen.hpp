#pragma once

#include <random>

#include "trackpath/graph.hpp"

namespace trackpath {

// Bipyramid over a (k+2)-cycle: source inside the ring, destination outside,
// both joined to every ring vertex. Every triangle (s, u_i, u_{i+1}) forces
// the next ring vertex, so the ring itself is the unique minimum tracking
// set: OPT equals the ring length, and Euler gives exactly twice that many
// faces. Vertices: s=0, t=1, ring 2..k+3.
inline Instance gen_tight_opt(int k) {
    if (k < 1) throw BadParameter("unit count must be at least 1");
    int r = k + 2;
    Graph g(r + 2);
    for (int i = 0; i < r; ++i) {
        int u = 2 + i, v = 2 + (i + 1) % r;
        g.add_edge(u, v);
        g.add_edge(0, u);
        g.add_edge(1, u);
    }
    return Instance(std::move(g), 0, 1);
}

// Prism over a (k+2)-gon with one top edge and one bottom edge subdivided by
// the terminals. No reduction applies (the only degree-2 vertices are the
// terminals), every other vertex keeps degree 3, so the approximation outputs
// all 2(k+2) of them -- exactly 2(F-2) by Euler. Vertices: top ring 0..r-1,
// bottom ring r..2r-1, s=2r splits top edge (0,1), t=2r+1 splits bottom
// edge (r, r+1).
inline Instance gen_tight_alg(int k) {
    if (k < 1) throw BadParameter("unit count must be at least 1");
    int r = k + 2;
    Graph g(2 * r + 2);
    int s = 2 * r, t = 2 * r + 1;
    for (int i = 0; i < r; ++i) {
        int j = (i + 1) % r;
        if (i == 0) {
            g.add_edge(0, s);
            g.add_edge(s, 1);
        } else {
            g.add_edge(i, j);
        }
        if (i == 0) {
            g.add_edge(r, t);
            g.add_edge(t, r + 1);
        } else {
            g.add_edge(r + i, r + j);
        }
        g.add_edge(i, r + i);
    }
    return Instance(std::move(g), s, t);
}

// Random connected planar instance, planar by construction: grow a stacked
// triangulation by repeatedly inserting a vertex into a random face, then
// delete random edges whose removal keeps the graph connected. Deterministic
// in (n, seed). s = 0, t = n-1.
inline Instance gen_random_planar(int n, unsigned seed) {
    if (n < 3) throw BadParameter("need at least 3 vertices");
    std::mt19937 rng(seed);
    auto pick = [&](std::size_t k) { return std::size_t(rng() % k); };

    struct Face {
        int a, b, c;
    };
    std::vector<Face> faces{{0, 1, 2}, {0, 1, 2}}; // inner and outer of the seed triangle
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {1, 2}};
    for (int v = 3; v < n; ++v) {
        std::size_t fi = pick(faces.size());
        Face f = faces[fi];
        faces.erase(faces.begin() + std::ptrdiff_t(fi));
        faces.push_back({f.a, f.b, v});
        faces.push_back({f.a, f.c, v});
        faces.push_back({f.b, f.c, v});
        edges.emplace_back(f.a, v);
        edges.emplace_back(f.b, v);
        edges.emplace_back(f.c, v);
    }

    Graph g = from_edge_list(n, edges);
    // knock out roughly a third of the edges, connectivity permitting
    std::vector<std::pair<int, int>> shuffled = g.edges();
    for (std::size_t i = shuffled.size(); i > 1; --i)
        std::swap(shuffled[i - 1], shuffled[pick(i)]);
    std::size_t target = shuffled.size() / 3;
    std::size_t removed = 0;
    for (auto [u, v] : shuffled) {
        if (removed == target) break;
        g.remove_edge(u, v);
        if (is_connected(g)) {
            ++removed;
        } else {
            g.add_edge(u, v);
        }
    }
    return Instance(std::move(g), 0, n - 1);
}

} // namespace trackpath

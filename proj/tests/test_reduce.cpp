#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "trackpath/exact.hpp"
#include "trackpath/reduce.hpp"

using namespace trackpath;
using namespace fixtures;

namespace {

// brute-force oracle for rule 1: everything on some s-t path stays
std::pair<std::set<int>, std::set<std::pair<int, int>>> path_marking(const Instance& inst) {
    std::set<int> vs;
    std::set<std::pair<int, int>> es;
    for (const auto& p : all_paths(inst)) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            vs.insert(p[i]);
            if (i + 1 < p.size()) es.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
        }
    }
    return {vs, es};
}

// replay trace steps on the input graph and compare with the reduced one
void check_replay(const Instance& inst, const Instance& red, const ReductionTrace& tr) {
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : inst.graph.edges()) edges.emplace(u, v);
    std::set<int> alive;
    for (int v = 0; v < inst.graph.n; ++v) alive.insert(v);
    for (const auto& st : tr.steps) {
        for (auto [u, v] : st.removed_edges) CHECK(edges.erase({u, v}) == 1);
        for (auto [u, v] : st.added_edges) CHECK(edges.emplace(u, v).second);
        for (int v : st.removed_vertices) CHECK(alive.erase(v) == 1);
    }
    CHECK(alive.size() == std::size_t(red.graph.n));
    CHECK(edges.size() == std::size_t(red.graph.m));
    // map reduced edges through id_map and compare
    std::set<std::pair<int, int>> red_edges;
    for (auto [u, v] : red.graph.edges()) {
        int a = tr.id_map[u], b = tr.id_map[v];
        red_edges.emplace(std::min(a, b), std::max(a, b));
    }
    CHECK(red_edges == edges);
    CHECK(tr.id_map[red.s] == inst.s);
    CHECK(tr.id_map[red.t] == inst.t);
}

} // namespace

TEST_CASE("rule 1 on fixtures") {
    // theta plus a pendant on vertex 1
    Instance g(from_edge_list(6, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4}, {1, 5}}), 0, 4);
    auto [red, tr] = reduction1(g);
    CHECK(red.graph.n == 5);
    CHECK(red.graph.m == 6);
    check_replay(g, red, tr);

    // theta plus a disconnected triangle
    Instance h(from_edge_list(8, {{0, 1}, {1, 4}, {0, 2}, {2, 4}, {0, 3}, {3, 4},
                                  {5, 6}, {6, 7}, {5, 7}}),
               0, 4);
    auto [red2, tr2] = reduction1(h);
    CHECK(red2.graph.n == 5);
    CHECK(red2.graph.m == 6);

    // cycle through s and t is already fixed
    Instance sq = square();
    auto [red3, tr3] = reduction1(sq);
    CHECK(red3.graph.n == 4);
    CHECK(tr3.steps.empty());

    // disconnected terminals
    Instance disc(from_edge_list(4, {{0, 1}, {2, 3}}), 0, 3);
    CHECK_THROWS_AS(reduction1(disc), EmptyResult);
}

TEST_CASE("rule 1 matches the path-marking oracle") {
    for (int seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random_planar(4 + seed % 9, unsigned(seed * 41));
        auto [red, tr] = reduction1(inst);
        auto [ovs, oes] = path_marking(inst);
        CHECK(ovs.size() == std::size_t(red.graph.n));
        CHECK(oes.size() == std::size_t(red.graph.m));
        std::set<int> kept(tr.id_map.begin(), tr.id_map.end());
        CHECK(kept == ovs);
        check_replay(inst, red, tr);
        // idempotent
        auto [red2, tr2] = reduction1(red);
        CHECK(red2.graph.n == red.graph.n);
        CHECK(tr2.steps.empty());
    }
}

TEST_CASE("rule 2 on fixtures") {
    // 4-cycle s-a-b-t plus chord s-t; ids s=0, a=1, b=2, t=3. The adjacent
    // degree-2 pair (1, 2) loses its higher member.
    Instance chord(from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}), 0, 3);
    auto [red, tr] = reduction2(chord);
    CHECK(red.graph.n == 3);
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].rule == 2);
    CHECK(tr.steps[0].removed_vertices == std::vector<int>{2});
    CHECK(tr.steps[0].added_edges == std::vector<std::pair<int, int>>{{1, 3}});
    check_replay(chord, red, tr);

    // 6-cycle through s and t with four degree-2 internals contracts to a
    // 4-cycle; the terminal-adjacent leftovers are out of the rule's reach
    Instance six(from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), 0, 3);
    auto [red6, tr6] = reduction2(six);
    CHECK(red6.graph.n == 4);
    CHECK(red6.graph.m == 4);
    CHECK(tr6.steps.size() == 2);

    // no adjacent degree-2 pair: unchanged
    Instance th = theta();
    auto [red2, tr2] = reduction2(th);
    CHECK(tr2.steps.empty());
    CHECK(red2.graph.n == 5);
}

TEST_CASE("rule 2 signals a skipped rule 1") {
    // vertices 2,3 are adjacent degree-2 non-terminals in a triangle with 1;
    // rule 1 would have deleted that triangle's dangling edges, so hitting
    // this shape means rule 1 was skipped
    Instance bad(from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {1, 4}}), 0, 4);
    CHECK_THROWS_AS(reduction2(bad), PreconditionViolated);
}

TEST_CASE("rule 3 on fixtures") {
    Instance tri = triangle_svt();
    auto [red, tr] = reduction3(tri);
    CHECK(red.graph.n == 2);
    CHECK(red.graph.m == 1);
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].forced_trackers == std::vector<int>{1});
    check_replay(tri, red, tr);

    // triangle (1,2,3) with degree-2 vertex 2 and both neighbors of degree 3:
    // s=0 - 1, triangle, 3 - 4 = t
    Instance tri2(from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 4}}), 0, 4);
    auto [red2, tr2] = reduction3(tri2);
    CHECK(tr2.forced_trackers() == std::vector<int>{2});
    CHECK(red2.graph.n == 4);

    Instance sq = square();
    auto [red3, tr3] = reduction3(sq);
    CHECK(tr3.steps.empty());
}

TEST_CASE("rule 4 on fixtures") {
    Instance sq = square(); // s=0, u=1, t=2, v=3
    auto [red, tr] = reduction4(sq);
    REQUIRE(tr.steps.size() == 1);
    CHECK(tr.steps[0].rule == 4);
    CHECK(tr.steps[0].forced_trackers == std::vector<int>{1}); // min(1, 3)
    CHECK(red.graph.n == 3);
    check_replay(sq, red, tr);

    // theta: two applications, trackers on 1 then 2, path through 3 remains
    Instance th = theta();
    auto [red2, tr2] = reduction4(th);
    CHECK(tr2.forced_trackers() == std::vector<int>{1, 2});
    CHECK(red2.graph.n == 3);
    CHECK(red2.graph.m == 2);

    Instance tri = triangle_svt();
    auto [red3, tr3] = reduction4(tri);
    CHECK(tr3.steps.empty());
}

TEST_CASE("reduce_fully on fixtures") {
    auto [red, tr] = reduce_fully(theta());
    CHECK(tr.forced_trackers() == std::vector<int>{1, 2});
    CHECK(red.graph.n == 3);

    auto [red2, tr2] = reduce_fully(triangle_svt());
    CHECK(tr2.forced_trackers() == std::vector<int>{1});
    CHECK(red2.graph.m == 1);

    auto [red3, tr3] = reduce_fully(path3());
    CHECK(tr3.steps.empty());
    CHECK(red3.graph.n == 3);
}

TEST_CASE("reduce_fully leaves no applicable rule and no low degrees") {
    for (int seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random_planar(5 + seed % 8, unsigned(seed * 47));
        auto [red, tr] = reduce_fully(inst);
        const Graph& g = red.graph;
        auto is_term = [&](int v) { return v == red.s || v == red.t; };
        for (int v = 0; v < g.n; ++v) {
            if (is_term(v)) continue;
            CHECK(g.degree(v) >= 2);
            if (g.degree(v) != 2) continue;
            // rule 3 exhausted: non-terminal degree-2 vertices close no triangle
            CHECK(!g.has_edge(g.adj[v][0], g.adj[v][1]));
            // rule 2 exhausted: no adjacent non-terminal degree-2 pair remains
            for (int u : g.adj[v])
                if (!is_term(u)) CHECK(g.degree(u) != 2);
        }
        // rule 4 exhausted: no degree-2 twins
        std::map<std::pair<int, int>, int> twins;
        for (int v = 0; v < g.n; ++v) {
            if (v == red.s || v == red.t || g.degree(v) != 2) continue;
            auto key = std::make_pair(g.adj[v][0], g.adj[v][1]);
            CHECK(++twins[key] <= 1);
        }
        // idempotent
        auto [red2, tr2] = reduce_fully(red);
        CHECK(tr2.steps.empty());
        check_replay(inst, red, tr);
    }
}

TEST_CASE("reductions are safe: optimum is preserved and lifts verify") {
    ExactOptions raw;
    raw.use_reduction = false;
    for (int seed = 1; seed <= 25; ++seed) {
        Instance inst = gen_random_planar(4 + seed % 9, unsigned(seed * 53));
        int opt_orig = int(min_tracking_set(inst, raw).size());

        // rule 1 directly on the input
        {
            auto [red, tr] = reduction1(inst);
            auto sub = min_tracking_set(red, raw);
            auto lifted = lift_solution(tr, sub.members);
            CHECK(int(lifted.size()) == opt_orig);
            CHECK(verify_by_definition(inst, TrackerSet(lifted)));
        }

        // rules 2-4 expect an input already fixed under rule 1
        auto [base, base_tr] = reduction1(inst);
        int opt_base = int(min_tracking_set(base, raw).size());
        CHECK(opt_base == opt_orig);
        for (int rule = 2; rule <= 4; ++rule) {
            auto [red, tr] = rule == 2   ? reduction2(base)
                             : rule == 3 ? reduction3(base)
                                         : reduction4(base);
            auto sub = min_tracking_set(red, raw);
            auto lifted = lift_solution(tr, sub.members);
            CHECK(int(lifted.size()) == opt_base);
            CHECK(verify_by_definition(base, TrackerSet(lifted)));
        }

        auto [red, tr] = reduce_fully(inst);
        auto sub = min_tracking_set(red, raw);
        auto lifted = lift_solution(tr, sub.members);
        CHECK(int(sub.size() + tr.forced_trackers().size()) == opt_orig);
        CHECK(verify_by_definition(inst, TrackerSet(lifted)));
    }
}

TEST_CASE("rule order does not change the tracking set size") {
    for (int seed = 1; seed <= 25; ++seed) {
        Instance inst = gen_random_planar(5 + seed % 8, unsigned(seed * 59));
        auto [ra, ta] = reduce_fully_order(inst, {2, 3, 4});
        auto [rb, tb] = reduce_fully_order(inst, {4, 3, 2});
        ExactOptions raw;
        raw.use_reduction = false;
        int total_a = int(ta.forced_trackers().size() + min_tracking_set(ra, raw).size());
        int total_b = int(tb.forced_trackers().size() + min_tracking_set(rb, raw).size());
        CHECK(total_a == total_b);
    }
}

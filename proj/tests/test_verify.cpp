#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "trackpath/reduce.hpp"
#include "trackpath/verify.hpp"

using namespace trackpath;
using namespace fixtures;

namespace {

// independent re-check of the four entry-exit conditions on a returned pair
void check_pair_conditions(const Instance& inst, const EntryExitPair& p) {
    const auto& P = p.witness_entry_path.vertices;
    const auto& R = p.witness_exit_path.vertices;
    REQUIRE(!P.empty());
    REQUIRE(!R.empty());
    CHECK(P.front() == inst.s);
    CHECK(P.back() == p.entry);
    CHECK(R.front() == p.exit);
    CHECK(R.back() == inst.t);
    for (std::size_t i = 0; i + 1 < P.size(); ++i) CHECK(inst.graph.has_edge(P[i], P[i + 1]));
    for (std::size_t i = 0; i + 1 < R.size(); ++i) CHECK(inst.graph.has_edge(R[i], R[i + 1]));
    std::set<int> sp(P.begin(), P.end()), sr(R.begin(), R.end());
    CHECK(sp.size() == P.size());
    CHECK(sr.size() == R.size());
    for (int v : sp) CHECK(!sr.count(v)); // condition 3
    std::set<int> cyc(p.cycle.vertices.begin(), p.cycle.vertices.end());
    for (int v : P) CHECK((cyc.count(v) ? v == p.entry : true)); // condition 4
    for (int v : R) CHECK((cyc.count(v) ? v == p.exit : true));
    CHECK(cyc.count(p.entry));
    CHECK(cyc.count(p.exit));
}

} // namespace

TEST_CASE("entry-exit pairs on the core fixtures") {
    Instance tri = triangle_svt();
    auto cyc = enumerate_simple_cycles(tri.graph, 10);
    REQUIRE(cyc.size() == 1);
    auto pairs = entry_exit_pairs(tri, cyc[0]);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].entry == tri.s);
    CHECK(pairs[0].exit == tri.t);
    CHECK(pairs[0].witness_entry_path.vertices == std::vector<int>{0});
    CHECK(pairs[0].witness_exit_path.vertices == std::vector<int>{2});
    check_pair_conditions(tri, pairs[0]);

    // theta cycle through a and b: only (s, t); the internals have degree 2
    Instance th = theta();
    Cycle c = canonical_cycle({0, 1, 4, 2});
    auto tp = entry_exit_pairs(th, c);
    REQUIRE(tp.size() == 1);
    CHECK(tp[0].entry == th.s);
    CHECK(tp[0].exit == th.t);
    check_pair_conditions(th, tp[0]);

    // cycle with an external tail on each side: entry s', exit t'
    // s=0 - 1 - cycle(1,2,3,4) - 3 - 5=t
    Instance tailed(from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 1}, {3, 5}}), 0, 5);
    Cycle c2 = canonical_cycle({1, 2, 3, 4});
    auto pp = entry_exit_pairs(tailed, c2);
    REQUIRE(pp.size() == 1);
    CHECK(pp[0].entry == 1);
    CHECK(pp[0].exit == 3);
    check_pair_conditions(tailed, pp[0]);
}

TEST_CASE("degree-2 vertices are never entry or exit unless terminal") {
    for (int seed = 1; seed <= 20; ++seed) {
        Instance inst = gen_random_planar(9, unsigned(seed * 3));
        for (const auto& c : enumerate_simple_cycles(inst.graph, 100'000)) {
            for (const auto& p : entry_exit_pairs(inst, c)) {
                if (p.entry != inst.s) CHECK(inst.graph.degree(p.entry) >= 3);
                if (p.exit != inst.t) CHECK(inst.graph.degree(p.exit) >= 3);
                check_pair_conditions(inst, p);
            }
        }
    }
}

TEST_CASE("after rule 1 every cycle has an entry-exit pair") {
    for (int seed = 1; seed <= 20; ++seed) {
        Instance inst = gen_random_planar(10, unsigned(seed * 11));
        auto [red, trace] = reduction1(inst);
        for (const auto& c : enumerate_simple_cycles(red.graph, 100'000))
            CHECK(!entry_exit_pairs(red, c).empty());
    }
}

TEST_CASE("is_cycle_tracked on fixtures") {
    Instance tri = triangle_svt();
    Cycle c = canonical_cycle({0, 1, 2});
    CHECK(is_cycle_tracked(tri, c, TrackerSet({1})));
    CHECK(!is_cycle_tracked(tri, c, TrackerSet({})));

    Instance th = theta();
    Cycle tc = canonical_cycle({0, 1, 4, 2});
    CHECK(is_cycle_tracked(th, tc, TrackerSet({1})));
    CHECK(!is_cycle_tracked(th, tc, TrackerSet({3})));

    // three trackers always suffice
    for (int seed = 1; seed <= 10; ++seed) {
        Instance inst = gen_random_planar(9, unsigned(seed * 17));
        for (const auto& cy : enumerate_simple_cycles(inst.graph, 100'000)) {
            if (cy.vertices.size() < 3) continue;
            TrackerSet three(
                {cy.vertices[0], cy.vertices[1], cy.vertices[2]});
            CHECK(is_cycle_tracked(inst, cy, three));
        }
    }
}

TEST_CASE("verifiers on the examples") {
    CHECK(verify_by_definition(path3(), TrackerSet({})));
    CHECK(verify_by_definition(theta(), TrackerSet({1, 2})));
    CHECK(!verify_by_definition(theta(), TrackerSet({1})));

    // forest next to the single path tracks with nothing
    Instance forest(from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), 0, 2);
    CHECK(verify_by_cycles(forest, TrackerSet({})));
    CHECK(verify_by_definition(forest, TrackerSet({})));

    CHECK(verify_by_cycles(theta(), TrackerSet({1, 2})));
    CHECK(!verify_by_cycles(square(), TrackerSet({})));

    auto v = find_violation(theta(), TrackerSet({1}));
    REQUIRE(v.has_value());
    CHECK(v->entry == 0);
    CHECK(v->exit == 4);
    // the two detours carry no trackers besides possibly entry/exit
    for (int x : v->detour_a.vertices)
        if (x != v->entry && x != v->exit) CHECK(x != 1);
    for (int x : v->detour_b.vertices)
        if (x != v->entry && x != v->exit) CHECK(x != 1);
    CHECK(!find_violation(theta(), TrackerSet({1, 2})).has_value());
    CHECK(!find_violation(triangle_svt(), TrackerSet({1})).has_value());
}

TEST_CASE("violation witnesses satisfy the disjointness shape") {
    for (int seed = 1; seed <= 30; ++seed) {
        Instance inst = gen_random_planar(9, unsigned(seed * 5));
        TrackerSet ts(sampled_subset(inst, unsigned(seed)));
        auto v = find_violation(inst, ts);
        if (!v) continue;
        std::set<int> P(v->prefix.vertices.begin(), v->prefix.vertices.end());
        std::set<int> R(v->suffix.vertices.begin(), v->suffix.vertices.end());
        std::set<int> A(v->detour_a.vertices.begin(), v->detour_a.vertices.end());
        std::set<int> B(v->detour_b.vertices.begin(), v->detour_b.vertices.end());
        CHECK(v->prefix.vertices.front() == inst.s);
        CHECK(v->prefix.vertices.back() == v->entry);
        CHECK(v->suffix.vertices.front() == v->exit);
        CHECK(v->suffix.vertices.back() == inst.t);
        CHECK(v->detour_a.vertices.front() == v->entry);
        CHECK(v->detour_a.vertices.back() == v->exit);
        CHECK(v->detour_b.vertices.front() == v->entry);
        CHECK(v->detour_b.vertices.back() == v->exit);
        CHECK(v->detour_a.vertices != v->detour_b.vertices);
        // P meets each detour exactly in the entry, R exactly in the exit
        for (int x : P) {
            if (A.count(x)) CHECK(x == v->entry);
            if (B.count(x)) CHECK(x == v->entry);
            CHECK(!R.count(x));
        }
        for (int x : R) {
            if (A.count(x)) CHECK(x == v->exit);
            if (B.count(x)) CHECK(x == v->exit);
        }
        // no tracker inside either detour
        for (int x : v->detour_a.vertices)
            if (x != v->entry && x != v->exit) CHECK(!ts.contains(x));
        for (int x : v->detour_b.vertices)
            if (x != v->entry && x != v->exit) CHECK(!ts.contains(x));
    }
}

TEST_CASE("three verifiers agree on random instances") {
    for (int seed = 1; seed <= 40; ++seed) {
        Instance inst = gen_random_planar(4 + seed % 8, unsigned(seed * 23 + 1));
        Verifier ver(inst);
        for (int trial = 0; trial < 12; ++trial) {
            TrackerSet ts(sampled_subset(inst, unsigned(seed * 100 + trial)));
            bool by_def = verify_by_definition(inst, ts);
            bool by_cyc = verify_by_cycles(inst, ts);
            bool by_wit = !find_violation(inst, ts).has_value();
            bool oracle = oracle_tracks(inst, ts.members);
            CHECK(by_def == oracle);
            CHECK(by_cyc == oracle);
            CHECK(by_wit == oracle);
            // the precomputed context answers the same way
            CHECK(ver.by_definition(ts) == oracle);
            CHECK(ver.by_cycles(ts) == oracle);
            CHECK(ver.violation(ts).has_value() == !oracle);
        }
    }
}

TEST_CASE("tracker sets are upward closed") {
    for (int seed = 1; seed <= 15; ++seed) {
        Instance inst = gen_random_planar(8, unsigned(seed * 31));
        TrackerSet ts(sampled_subset(inst, unsigned(seed)));
        if (!verify_by_definition(inst, ts)) continue;
        std::vector<int> more = ts.members;
        more.push_back(unsigned(seed) % inst.graph.n);
        CHECK(verify_by_definition(inst, TrackerSet(more)));
    }
}

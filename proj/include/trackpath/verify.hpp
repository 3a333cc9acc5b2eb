#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "trackpath/enumerate.hpp"
#include "trackpath/graph.hpp"

namespace trackpath {

// Proposed or certified tracking set; members sorted ascending.
struct TrackerSet {
    std::vector<int> members;

    TrackerSet() = default;
    explicit TrackerSet(std::vector<int> ms) : members(std::move(ms)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }
    TrackerSet(std::initializer_list<int> ms) : TrackerSet(std::vector<int>(ms)) {}

    bool contains(int v) const {
        return std::binary_search(members.begin(), members.end(), v);
    }
    std::size_t size() const { return members.size(); }

    VertexSet mask(int n) const {
        VertexSet m(n);
        for (int v : members) m.set(v);
        return m;
    }
};

// Ordered pair (entry, exit) on a cycle, with one witness path pair:
// entry_path runs s..entry and meets the cycle only at entry, exit_path runs
// exit..t and meets the cycle only at exit, and the two are vertex-disjoint.
struct EntryExitPair {
    int entry = -1;
    int exit = -1;
    Cycle cycle;
    VertexPath witness_entry_path;
    VertexPath witness_exit_path;
};

// Witness that a tracker set fails: two tracker-free detours between an
// entry-exit pair, reachable by a disjoint prefix and suffix.
struct Violation {
    int entry = -1;
    int exit = -1;
    VertexPath detour_a;
    VertexPath detour_b;
    VertexPath prefix;
    VertexPath suffix;
};

namespace detail {

// Deterministic BFS path from `from` to `to` avoiding `banned`; neighbors are
// scanned ascending so parents (and hence the path) are reproducible.
inline bool bfs_path(const Graph& g, int from, int to, const VertexSet& banned,
                     std::vector<int>* out) {
    if (banned.test(from) || banned.test(to)) return false;
    if (from == to) {
        if (out) *out = {from};
        return true;
    }
    std::vector<int> parent(g.n, -1);
    std::vector<int> queue{from};
    parent[from] = from;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int v : g.adj[u]) {
            if (parent[v] != -1 || banned.test(v)) continue;
            parent[v] = u;
            if (v == to) {
                std::vector<int> path{to};
                while (path.back() != from) path.push_back(parent[path.back()]);
                std::reverse(path.begin(), path.end());
                if (out) *out = std::move(path);
                return true;
            }
            queue.push_back(v);
        }
    }
    return false;
}

// Decides whether (s1, t1) is an entry-exit pair of the cycle given by
// cycle_mask, and returns one witness path pair. The prefix is enumerated
// exhaustively (DFS, ascending neighbors) because different prefixes block
// different suffixes; for each candidate prefix a BFS looks for a disjoint
// suffix. A partial prefix that already cuts the exit off from t cannot be
// completed, so that subtree is skipped; this prunes nothing a valid witness
// could hide in and keeps the first-found witness deterministic. Budget
// counts DFS node expansions.
inline bool find_pair_witness(const Graph& g, int s, int t, const VertexSet& cycle_mask,
                              int s1, int t1, std::size_t budget,
                              VertexPath* entry_path, VertexPath* exit_path) {
    VertexSet pban = cycle_mask;
    pban.reset(s1);
    pban.set(t); // a valid witness suffix owns t
    VertexSet rban = cycle_mask;
    rban.reset(t1);
    rban.set(s);

    auto try_suffix = [&](const std::vector<int>& prefix) {
        VertexSet blocked = rban;
        for (int v : prefix) blocked.set(v);
        blocked.reset(t1); // t1 stays usable even if listed above
        std::vector<int> suffix;
        if (!bfs_path(g, t1, t, blocked, &suffix)) return false;
        if (entry_path) entry_path->vertices = prefix;
        if (exit_path) exit_path->vertices = std::move(suffix);
        return true;
    };

    if (s1 == s) return try_suffix({s});
    if (pban.test(s)) return false; // s lies on the cycle, so only s1 == s works

    // cheap necessary conditions before enumerating prefixes
    if (!bfs_path(g, s, s1, pban, nullptr)) return false;
    if (!bfs_path(g, t1, t, rban, nullptr)) return false;

    VertexSet onpath(g.n);
    auto suffix_alive = [&]() {
        VertexSet blocked = rban;
        blocked |= onpath;
        blocked.reset(t1);
        return bfs_path(g, t1, t, blocked, nullptr);
    };

    std::size_t nodes = 0;
    std::vector<int> path{s};
    std::vector<char> used(g.n, 0);
    used[s] = 1;
    onpath.set(s);
    struct Frame {
        int u;
        std::size_t next;
    };
    std::vector<Frame> stack{{s, 0}};
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.u == s1) {
            if (try_suffix(path)) return true;
            used[fr.u] = 0;
            onpath.reset(fr.u);
            path.pop_back();
            stack.pop_back();
            continue;
        }
        if (fr.next < g.adj[fr.u].size()) {
            int v = g.adj[fr.u][fr.next++];
            if (used[v] || pban.test(v)) continue;
            if (++nodes > budget) throw CapExceeded("disjoint-witness search budget exceeded");
            used[v] = 1;
            onpath.set(v);
            if (!suffix_alive()) {
                used[v] = 0;
                onpath.reset(v);
                continue;
            }
            path.push_back(v);
            stack.push_back({v, 0});
        } else {
            used[fr.u] = 0;
            onpath.reset(fr.u);
            path.pop_back();
            stack.pop_back();
        }
    }
    return false;
}

inline VertexSet cycle_to_mask(const Graph& g, const Cycle& c) {
    VertexSet m(g.n);
    for (int v : c.vertices) m.set(v);
    return m;
}

// Candidate entries/exits: a cycle vertex can be an entry only if it is s or
// has an edge leaving the cycle (degree 3 or more); same for exits with t.
inline bool can_be_entry(const Instance& inst, int v) {
    return v == inst.s || inst.graph.degree(v) >= 3;
}
inline bool can_be_exit(const Instance& inst, int v) {
    return v == inst.t || inst.graph.degree(v) >= 3;
}

} // namespace detail

// All entry-exit pairs of one cycle, ordered by (entry, exit) ascending.
inline std::vector<EntryExitPair> entry_exit_pairs(const Instance& inst, const Cycle& cycle,
                                                   const Caps& caps = {}) {
    const Graph& g = inst.graph;
    VertexSet cmask = detail::cycle_to_mask(g, cycle);
    std::vector<int> vs = cycle.vertices;
    std::sort(vs.begin(), vs.end());

    std::vector<EntryExitPair> out;
    for (int s1 : vs) {
        if (cmask.test(inst.s) && s1 != inst.s) continue;
        if (!detail::can_be_entry(inst, s1)) continue;
        for (int t1 : vs) {
            if (t1 == s1) continue;
            if (cmask.test(inst.t) && t1 != inst.t) continue;
            if (!detail::can_be_exit(inst, t1)) continue;
            VertexPath pw, rw;
            if (detail::find_pair_witness(g, inst.s, inst.t, cmask, s1, t1, caps.witness_cap,
                                          &pw, &rw)) {
                out.push_back(EntryExitPair{s1, t1, cycle, std::move(pw), std::move(rw)});
            }
        }
    }
    return out;
}

// True iff every entry-exit pair of the cycle leaves a tracker on the rest of
// the cycle. A cycle holding 3 trackers is tracked outright: every pair spares
// at least one of them.
inline bool is_cycle_tracked(const Instance& inst, const Cycle& cycle, const TrackerSet& trackers,
                             const Caps& caps = {}) {
    const Graph& g = inst.graph;
    int on_cycle = 0;
    for (int v : cycle.vertices) on_cycle += trackers.contains(v);
    if (on_cycle >= 3) return true;

    VertexSet cmask = detail::cycle_to_mask(g, cycle);
    std::vector<int> vs = cycle.vertices;
    std::sort(vs.begin(), vs.end());
    for (int s1 : vs) {
        if (cmask.test(inst.s) && s1 != inst.s) continue;
        if (!detail::can_be_entry(inst, s1)) continue;
        for (int t1 : vs) {
            if (t1 == s1) continue;
            if (cmask.test(inst.t) && t1 != inst.t) continue;
            if (!detail::can_be_exit(inst, t1)) continue;
            bool tracked = false;
            for (int v : cycle.vertices)
                if (v != s1 && v != t1 && trackers.contains(v)) {
                    tracked = true;
                    break;
                }
            if (tracked) continue;
            if (detail::find_pair_witness(g, inst.s, inst.t, cmask, s1, t1, caps.witness_cap,
                                          nullptr, nullptr))
                return false;
        }
    }
    return true;
}

// Definition-level verifier: project every simple s-t path onto the tracker
// set and demand pairwise distinct sequences.
inline bool verify_by_definition(const Instance& inst, const TrackerSet& trackers,
                                 const Caps& caps = {}) {
    auto paths = enumerate_st_paths(inst, caps.path_cap);
    std::vector<std::vector<int>> seqs;
    seqs.reserve(paths.size());
    for (const auto& p : paths) {
        std::vector<int> seq;
        for (int v : p.vertices)
            if (trackers.contains(v)) seq.push_back(v);
        seqs.push_back(std::move(seq));
    }
    std::sort(seqs.begin(), seqs.end());
    return std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end();
}

// Cycle-level verifier: every simple cycle must be tracked. A cycle carrying
// 3 trackers is tracked outright, so only cycles with at most 2 trackers are
// enumerated (pruned DFS) and pay for the entry-exit pair search.
inline bool verify_by_cycles(const Instance& inst, const TrackerSet& trackers,
                             const Caps& caps = {}) {
    VertexSet tmask = trackers.mask(inst.graph.n);
    bool ok = true;
    for_each_low_marked_cycle(inst.graph, tmask, 2, caps.cycle_cap,
                              [&](const std::vector<int>& vs) {
                                  if (!is_cycle_tracked(inst, Cycle{vs}, trackers, caps))
                                      ok = false;
                                  return ok;
                              });
    return ok;
}

namespace detail {

inline Violation make_violation(const Cycle& cycle, int entry, int exit, VertexPath prefix,
                                VertexPath suffix) {
    const auto& vs = cycle.vertices;
    int k = int(vs.size());
    int ei = int(std::find(vs.begin(), vs.end(), entry) - vs.begin());
    int xi = int(std::find(vs.begin(), vs.end(), exit) - vs.begin());
    Violation viol;
    viol.entry = entry;
    viol.exit = exit;
    for (int i = ei;; i = (i + 1) % k) {
        viol.detour_a.vertices.push_back(vs[i]);
        if (i == xi) break;
    }
    for (int i = ei;; i = (i + k - 1) % k) {
        viol.detour_b.vertices.push_back(vs[i]);
        if (i == xi) break;
    }
    viol.prefix = std::move(prefix);
    viol.suffix = std::move(suffix);
    return viol;
}

} // namespace detail

// Searches ordered pairs (entry, exit) in increasing id order, and for each
// pair the cycles in canonical enumeration order, for an untracked entry-exit
// pair; returns the first witness found, or nothing if the set tracks. Only
// cycles with at most 2 trackers can host an untracked pair, so only those
// are collected.
inline std::optional<Violation> find_violation(const Instance& inst, const TrackerSet& trackers,
                                               const Caps& caps = {}) {
    const Graph& g = inst.graph;
    VertexSet tmask = trackers.mask(g.n);
    std::vector<Cycle> cycles;
    for_each_low_marked_cycle(g, tmask, 2, caps.cycle_cap,
                              [&](const std::vector<int>& vs) { cycles.push_back(Cycle{vs}); });
    std::vector<VertexSet> masks;
    masks.reserve(cycles.size());
    for (const auto& c : cycles) masks.push_back(detail::cycle_to_mask(g, c));

    for (int s1 = 0; s1 < g.n; ++s1) {
        if (!detail::can_be_entry(inst, s1)) continue;
        for (int t1 = 0; t1 < g.n; ++t1) {
            if (t1 == s1 || !detail::can_be_exit(inst, t1)) continue;
            for (std::size_t ci = 0; ci < cycles.size(); ++ci) {
                const auto& cm = masks[ci];
                if (!cm.test(s1) || !cm.test(t1)) continue;
                if (cm.test(inst.s) && s1 != inst.s) continue;
                if (cm.test(inst.t) && t1 != inst.t) continue;
                bool tracked = false;
                for (int v : cycles[ci].vertices)
                    if (v != s1 && v != t1 && trackers.contains(v)) {
                        tracked = true;
                        break;
                    }
                if (tracked) continue;
                VertexPath pw, rw;
                if (detail::find_pair_witness(g, inst.s, inst.t, cm, s1, t1, caps.witness_cap,
                                              &pw, &rw)) {
                    return detail::make_violation(cycles[ci], s1, t1, std::move(pw),
                                                  std::move(rw));
                }
            }
        }
    }
    return std::nullopt;
}

// Precomputed verification context for one instance. Paths, cycles and
// entry-exit pairs do not depend on the tracker set, so a caller checking many
// candidate sets against one instance (the exact solver, property tests)
// builds this once and queries it per set.
class Verifier {
public:
    explicit Verifier(Instance inst, Caps caps = {}, bool store_witnesses = true)
        : inst_(std::move(inst)), caps_(caps), store_witnesses_(store_witnesses) {}

    const Instance& instance() const { return inst_; }

    const std::vector<VertexPath>& paths() {
        if (!paths_built_) {
            paths_ = enumerate_st_paths(inst_, caps_.path_cap);
            paths_built_ = true;
        }
        return paths_;
    }

    const std::vector<Cycle>& cycles() {
        if (!cycles_built_) {
            cycles_ = enumerate_simple_cycles(inst_.graph, caps_.cycle_cap);
            cycles_built_ = true;
        }
        return cycles_;
    }

    bool by_definition(const TrackerSet& trackers) {
        paths();
        std::vector<std::vector<int>> seqs;
        seqs.reserve(paths_.size());
        for (const auto& p : paths_) {
            std::vector<int> seq;
            for (int v : p.vertices)
                if (trackers.contains(v)) seq.push_back(v);
            seqs.push_back(std::move(seq));
        }
        std::sort(seqs.begin(), seqs.end());
        return std::adjacent_find(seqs.begin(), seqs.end()) == seqs.end();
    }

    bool by_cycles(const TrackerSet& trackers) {
        build_pairs();
        VertexSet tm = trackers.mask(inst_.graph.n);
        for (const auto& pr : pairs_)
            if (!tm.intersects(pr.complement)) return false;
        return true;
    }

    std::optional<Violation> violation(const TrackerSet& trackers) {
        build_pairs();
        VertexSet tm = trackers.mask(inst_.graph.n);
        for (const auto& pr : pairs_) {
            if (tm.intersects(pr.complement)) continue;
            VertexPath pw = pr.prefix, rw = pr.suffix;
            if (!store_witnesses_) {
                detail::find_pair_witness(inst_.graph, inst_.s, inst_.t,
                                          detail::cycle_to_mask(inst_.graph, cycles_[pr.cycle]),
                                          pr.entry, pr.exit, caps_.witness_cap, &pw, &rw);
            }
            return detail::make_violation(cycles_[pr.cycle], pr.entry, pr.exit, std::move(pw),
                                          std::move(rw));
        }
        return std::nullopt;
    }

    std::size_t pair_count() {
        build_pairs();
        return pairs_.size();
    }

private:
    struct PairRec {
        int entry, exit;
        std::size_t cycle;
        VertexSet complement;
        VertexPath prefix, suffix;
    };

    void build_pairs() {
        if (pairs_built_) return;
        cycles();
        const Graph& g = inst_.graph;
        for (std::size_t ci = 0; ci < cycles_.size(); ++ci) {
            VertexSet cm = detail::cycle_to_mask(g, cycles_[ci]);
            std::vector<int> vs = cycles_[ci].vertices;
            std::sort(vs.begin(), vs.end());
            for (int s1 : vs) {
                if (cm.test(inst_.s) && s1 != inst_.s) continue;
                if (!detail::can_be_entry(inst_, s1)) continue;
                for (int t1 : vs) {
                    if (t1 == s1) continue;
                    if (cm.test(inst_.t) && t1 != inst_.t) continue;
                    if (!detail::can_be_exit(inst_, t1)) continue;
                    VertexPath pw, rw;
                    bool ok = detail::find_pair_witness(
                        g, inst_.s, inst_.t, cm, s1, t1, caps_.witness_cap,
                        store_witnesses_ ? &pw : nullptr, store_witnesses_ ? &rw : nullptr);
                    if (!ok) continue;
                    VertexSet comp(g.n);
                    for (int v : cycles_[ci].vertices)
                        if (v != s1 && v != t1) comp.set(v);
                    pairs_.push_back(PairRec{s1, t1, ci, std::move(comp), std::move(pw),
                                             std::move(rw)});
                }
            }
        }
        std::stable_sort(pairs_.begin(), pairs_.end(), [](const PairRec& a, const PairRec& b) {
            if (a.entry != b.entry) return a.entry < b.entry;
            if (a.exit != b.exit) return a.exit < b.exit;
            return a.cycle < b.cycle;
        });
        pairs_built_ = true;
    }

    Instance inst_;
    Caps caps_;
    bool store_witnesses_;
    bool paths_built_ = false, cycles_built_ = false, pairs_built_ = false;
    std::vector<VertexPath> paths_;
    std::vector<Cycle> cycles_;
    std::vector<PairRec> pairs_;
};

} // namespace trackpath

#pragma once

#include <future>
#include <optional>
#include <vector>

#include "trackpath/reduce.hpp"
#include "trackpath/verify.hpp"

namespace trackpath {

struct ExactOptions {
    bool use_reduction = true;    // search the reduced instance first
    std::optional<int> budget;    // report BudgetExceeded if the optimum is larger
    int jobs = 1;                 // candidate checks per cardinality level run in parallel
    Caps caps;
};

namespace detail {

// Lexicographic combination enumeration over candidate indices. Visits
// subsets of the given cardinality in increasing lexicographic order of
// their sorted member lists and stops when visit() returns true.
template <class Visit>
inline bool for_each_combination(int n, int k, Visit&& visit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) return visit(idx);
    while (true) {
        if (visit(idx)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline TrackerSet pick(const std::vector<int>& candidates, const std::vector<int>& idx) {
    std::vector<int> members;
    members.reserve(idx.size());
    for (int i : idx) members.push_back(candidates[i]);
    return TrackerSet(std::move(members));
}

// Rank/unrank support for deterministic parallel scans of one cardinality
// level. Combinations are ranked in the same lexicographic order the serial
// scan uses.
inline std::vector<long long> binomial_row(int n, int k) {
    std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(k + 1, 0));
    for (int i = 0; i <= n; ++i) {
        c[i][0] = 1;
        for (int j = 1; j <= std::min(i, k); ++j)
            c[i][j] = c[i - 1][j - 1] + (i - 1 >= j ? c[i - 1][j] : 0);
    }
    std::vector<long long> flat((n + 1) * (k + 1));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= k; ++j) flat[i * (k + 1) + j] = c[i][j];
    return flat;
}

inline std::vector<int> unrank_combination(int n, int k, long long rank,
                                           const std::vector<long long>& binom) {
    auto C = [&](int a, int b) -> long long {
        if (b < 0 || b > a) return 0;
        return binom[a * (k + 1) + b];
    };
    std::vector<int> idx(k);
    int x = 0;
    for (int i = 0; i < k; ++i) {
        while (true) {
            long long block = C(n - x - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
            ++x;
        }
        idx[i] = x++;
    }
    return idx;
}

// Smallest lexicographic passing subset of exactly this cardinality, or
// nothing. Parallel mode splits the rank space into chunks; the winner is the
// minimum passing rank, so the result does not depend on the thread count.
inline std::optional<std::vector<int>> level_search(Verifier& ver,
                                                    const std::vector<int>& candidates, int k,
                                                    int jobs) {
    int n = int(candidates.size());
    if (k > n) return std::nullopt;
    if (jobs <= 1) {
        std::optional<std::vector<int>> hit;
        for_each_combination(n, k, [&](const std::vector<int>& idx) {
            if (ver.by_cycles(pick(candidates, idx))) {
                hit = idx;
                return true;
            }
            return false;
        });
        if (!hit) return std::nullopt;
        std::vector<int> members;
        for (int i : *hit) members.push_back(candidates[i]);
        return members;
    }

    ver.pair_count(); // force the shared context before threads start reading it
    auto binom = binomial_row(n, k);
    long long total = binom[n * (k + 1) + k];
    long long chunk = std::max<long long>(1, (total + jobs - 1) / jobs);
    std::vector<std::future<long long>> futs;
    for (int j = 0; j < jobs; ++j) {
        long long lo = j * chunk, hi = std::min(total, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [&, lo, hi]() -> long long {
            for (long long r = lo; r < hi; ++r) {
                auto idx = unrank_combination(n, k, r, binom);
                if (ver.by_cycles(pick(candidates, idx))) return r;
            }
            return -1;
        }));
    }
    long long best = -1;
    for (auto& f : futs) {
        long long r = f.get();
        if (r >= 0 && (best < 0 || r < best)) best = r;
    }
    if (best < 0) return std::nullopt;
    auto idx = unrank_combination(n, k, best, binom);
    std::vector<int> members;
    for (int i : idx) members.push_back(candidates[i]);
    return members;
}

inline std::vector<int> internal_vertices(const Instance& inst) {
    std::vector<int> out;
    for (int v = 0; v < inst.graph.n; ++v)
        if (v != inst.s && v != inst.t) out.push_back(v);
    return out;
}

} // namespace detail

// Minimum tracking set by cardinality-ordered exhaustive search; among the
// minimum sets the lexicographically smallest member list is returned.
// Candidates exclude s and t (they refine nothing). With use_reduction the
// cardinality is first established on the reduced instance, then the
// lexicographic winner of that cardinality is located on the input instance.
inline TrackerSet min_tracking_set(const Instance& inst, const ExactOptions& opt = {}) {
    int start_k = 0;
    if (opt.use_reduction) {
        try {
            auto [red, trace] = reduce_fully(inst);
            int forced = int(trace.forced_trackers().size());
            Verifier rv(red, opt.caps, /*store_witnesses=*/false);
            auto cands = detail::internal_vertices(red);
            int kr = 0;
            for (;; ++kr) {
                if (opt.budget && kr + forced > *opt.budget) throw BudgetExceeded(kr + forced);
                if (detail::level_search(rv, cands, kr, opt.jobs)) break;
                if (kr > int(cands.size()))
                    throw Error("no tracking set found on reduced instance");
            }
            start_k = kr + forced;
            if (opt.budget && start_k > *opt.budget) throw BudgetExceeded(start_k);
        } catch (const EmptyResult&) {
            // no s-t path at all: the empty set already tracks, fall through
            start_k = 0;
        }
    }

    Verifier ver(inst, opt.caps, /*store_witnesses=*/false);
    auto cands = detail::internal_vertices(inst);
    for (int k = start_k;; ++k) {
        if (opt.budget && k > *opt.budget) throw BudgetExceeded(k);
        if (auto hit = detail::level_search(ver, cands, k, opt.jobs))
            return TrackerSet(std::move(*hit));
        if (k > int(cands.size())) throw Error("no tracking set found");
    }
}

// All minimum tracking sets, lexicographic order.
inline std::vector<TrackerSet> all_min_tracking_sets(const Instance& inst,
                                                     const ExactOptions& opt = {}) {
    TrackerSet best = min_tracking_set(inst, opt);
    int k = int(best.size());
    Verifier ver(inst, opt.caps, /*store_witnesses=*/false);
    auto cands = detail::internal_vertices(inst);
    std::vector<TrackerSet> out;
    detail::for_each_combination(int(cands.size()), k, [&](const std::vector<int>& idx) {
        TrackerSet ts = detail::pick(cands, idx);
        if (ver.by_cycles(ts)) out.push_back(std::move(ts));
        return false;
    });
    return out;
}

// Optimum value together with the number of distinct minimum tracking sets.
inline std::pair<int, long long> count_min_tracking_sets(const Instance& inst,
                                                         const ExactOptions& opt = {}) {
    auto all = all_min_tracking_sets(inst, opt);
    return {all.empty() ? 0 : int(all.front().size()), (long long)(all.size())};
}

} // namespace trackpath

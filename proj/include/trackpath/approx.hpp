#pragma once

#include "trackpath/reduce.hpp"
#include "trackpath/verify.hpp"

namespace trackpath {

// Output of the planar approximation run: the tracker set on input ids plus
// the face arithmetic behind its guarantee. faces is Euler-computed on the
// graph left by rule 1 (before rules 2-4), which is the graph the lower bound
// speaks about; each rule-3/4 tracker later removes exactly one face, keeping
// the certificate arithmetic consistent.
struct ApproxCertificate {
    TrackerSet trackers;
    int alg_size = 0;
    int faces = 0;
    int opt_lower = 0;
    bool has_ratio = false; // false when opt_lower is 0 (no cycles anywhere)
    long long ratio_num = 0, ratio_den = 1;
};

// ceil((F-1)/2): the face-count lower bound on the optimum, meaningful under
// the caller's planarity promise. Expects the instance to be fixed under
// rule 1 already; connectivity is checked.
inline int opt_lower_bound(const Instance& inst) {
    return face_count(inst.graph) / 2; // ceil((F-1)/2) == floor(F/2) for integral F
}

// Reduce fully, then output the forced trackers plus every surviving vertex
// of degree at least 3 except the terminals, lifted to input ids.
inline ApproxCertificate algorithm_a(const Instance& inst) {
    auto [g1, tr1] = reduction1(inst);
    int faces = face_count(g1.graph);

    auto [g2, tr2] = reduce_fully(g1); // rule 1 inside is a no-op here
    std::vector<int> picked = tr2.forced_trackers();
    for (int v = 0; v < g2.graph.n; ++v)
        if (v != g2.s && v != g2.t && g2.graph.degree(v) >= 3)
            picked.push_back(tr2.id_map[v]);

    // picked is in g1 ids; lift to input ids
    std::vector<int> lifted;
    lifted.reserve(picked.size());
    for (int v : picked) lifted.push_back(tr1.id_map[v]);

    ApproxCertificate cert;
    cert.trackers = TrackerSet(std::move(lifted));
    cert.alg_size = int(cert.trackers.size());
    cert.faces = faces;
    cert.opt_lower = faces / 2;
    if (cert.opt_lower > 0) {
        cert.has_ratio = true;
        cert.ratio_num = cert.alg_size;
        cert.ratio_den = cert.opt_lower;
    }
    return cert;
}

} // namespace trackpath

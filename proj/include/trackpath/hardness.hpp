#pragma once

#include <array>
#include <cstdlib>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "trackpath/graph.hpp"
#include "trackpath/verify.hpp"

namespace trackpath {

// 3-CNF formula over variables 1..num_vars; literals are signed DIMACS-style
// ints, three distinct variables per clause.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::array<int, 3>> clauses;
};

enum class Side { above, below };

// Rectilinear placement data for one clause: which side of the spine it is
// drawn on and, per literal (in clause order), the gadget column its leg
// attaches to.
struct ClausePlacement {
    Side side = Side::above;
    std::array<int, 3> slots{0, 0, 0}; // 1-based columns
};

// Caller-provided drawing data: variable order along the spine plus clause
// placements. Validated, never synthesized.
struct CnfLayout {
    std::vector<int> order; // permutation of 1..num_vars
    std::vector<ClausePlacement> clauses;
};

// Vertex ids of one variable gadget. Column k (1-based) holds h_k on the top
// row, mu_k in the middle and l_k on the bottom. The top-row vertex of column
// k carries the positive literal exactly when k is even; the bottom row is
// phased oppositely, so each column contributes one vertex per polarity.
struct GadgetLabels {
    int var = 0; // variable id, 1-based
    int m = 0;
    int s = -1, t = -1;
    int alpha = -1, beta = -1, alpha_p = -1, beta_p = -1;
    std::vector<int> h, mu, l; // index 0 is column 1

    static bool h_positive(int k) { return k % 2 == 0; }
    static bool l_positive(int k) { return k % 2 == 1; }

    bool row_positive(Side side, int k) const {
        return side == Side::above ? h_positive(k) : l_positive(k);
    }
    int row_vertex(Side side, int k) const {
        return side == Side::above ? h[k - 1] : l[k - 1];
    }
};

// One compiled clause: the attach vertices, the enclosing face and the edges
// the clause added.
struct ClauseAttachment {
    int alpha = -1, gamma = -1;       // outer literal vertices
    std::array<int, 5> beta{};        // the five-vertex middle run
    Cycle face;
    std::vector<std::pair<int, int>> added_edges;
};

struct SatReduction {
    Instance instance;
    long long target = 0;
    std::vector<GadgetLabels> labels; // index var-1
    std::vector<ClauseAttachment> attachments;
};

namespace detail {

// Appends one variable gadget to an edge list. The terminal s must already
// exist; interior vertices and t are allocated from next_id. Wiring:
//   - three horizontal rows plus verticals h_k-mu_k, mu_k-l_k form the grid
//     whose square faces pin the alternating tracker pattern;
//   - alpha..beta' sit between a terminal and the end column of their row,
//     each the degree-2 corner of a triangle when the terminal fan edge is
//     present, which forces a tracker on it;
//   - at an outer end the terminal fans (s-h1, s-l1 resp. t-hm, t-lm) close
//     a quad with the end column's verticals, coupling that column. At a
//     shared interior terminal the fans are left out and the terminal is
//     reached through alpha/beta alone: a fan edge there would put the ear
//     on a triangle with a literal vertex, and the tracker-forcing edges
//     between neighbouring gadgets would turn that triangle into an
//     untracked entry-exit pair.
inline GadgetLabels append_gadget(int var, int m, int s, int& next_id,
                                  std::vector<std::pair<int, int>>& edges, bool left_fan,
                                  bool right_fan) {
    GadgetLabels lab;
    lab.var = var;
    lab.m = m;
    lab.s = s;
    lab.h.resize(m);
    lab.mu.resize(m);
    lab.l.resize(m);
    for (int k = 0; k < m; ++k) lab.h[k] = next_id++;
    for (int k = 0; k < m; ++k) lab.mu[k] = next_id++;
    for (int k = 0; k < m; ++k) lab.l[k] = next_id++;
    lab.alpha = next_id++;
    lab.beta = next_id++;
    lab.alpha_p = next_id++;
    lab.beta_p = next_id++;
    lab.t = next_id++;

    auto e = [&](int u, int v) { edges.emplace_back(u, v); };
    for (int k = 0; k + 1 < m; ++k) {
        e(lab.h[k], lab.h[k + 1]);
        e(lab.mu[k], lab.mu[k + 1]);
        e(lab.l[k], lab.l[k + 1]);
    }
    for (int k = 0; k < m; ++k) {
        e(lab.h[k], lab.mu[k]);
        e(lab.mu[k], lab.l[k]);
    }
    if (left_fan) {
        e(lab.s, lab.h[0]);
        e(lab.s, lab.l[0]);
    }
    if (right_fan) {
        e(lab.t, lab.h[m - 1]);
        e(lab.t, lab.l[m - 1]);
    }
    e(lab.s, lab.alpha);
    e(lab.alpha, lab.h[0]);
    e(lab.s, lab.beta);
    e(lab.beta, lab.l[0]);
    e(lab.t, lab.alpha_p);
    e(lab.alpha_p, lab.h[m - 1]);
    e(lab.t, lab.beta_p);
    e(lab.beta_p, lab.l[m - 1]);
    return lab;
}

} // namespace detail

// Gadget length for a variable occurring `occurrences` times: each occurrence
// consumes a five-column window (the attach column plus the four reserved
// columns after it), and one margin column is kept free at each end.
inline int gadget_length(int occurrences) {
    return std::max(2, 5 * occurrences + 2);
}

// Standalone variable gadget with its own terminals.
inline std::pair<Graph, GadgetLabels> build_variable_gadget(int m) {
    if (m < 2) throw BadParameter("gadget length must be at least 2");
    std::vector<std::pair<int, int>> edges;
    int next_id = 1;
    GadgetLabels lab = detail::append_gadget(1, m, 0, next_id, edges, true, true);
    return {from_edge_list(next_id, edges), lab};
}

namespace detail {

struct SlotBooking {
    // reserved column windows per (variable, side): [from, to] inclusive
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> taken;

    void reserve(int var, Side side, int from, int to, int clause_idx) {
        auto& list = taken[{var, side == Side::above ? 0 : 1}];
        for (auto [a, b] : list)
            if (!(to < a || b < from))
                throw SlotConflict("clause " + std::to_string(clause_idx) +
                                   ": reserved columns " + std::to_string(from) + ".." +
                                   std::to_string(to) + " of variable x" + std::to_string(var) +
                                   " already belong to another clause gadget");
        list.emplace_back(from, to);
    }
};

} // namespace detail

// Closes one clause face over already-built gadgets. The literal whose
// variable sits between the other two on the spine contributes the
// five-vertex alternating run; the outer two contribute single vertices.
// Validates the slot restrictions and appends the three closing edges.
inline ClauseAttachment build_clause_gadget(std::vector<std::pair<int, int>>& edges,
                                            const std::vector<GadgetLabels>& labels,
                                            const std::vector<int>& spine_pos,
                                            const std::array<int, 3>& clause,
                                            const ClausePlacement& place, int clause_idx,
                                            detail::SlotBooking& booking) {
    struct Leg {
        int lit;
        int slot;
        int pos;
    };
    std::array<Leg, 3> legs;
    for (int i = 0; i < 3; ++i) {
        int var = std::abs(clause[i]);
        legs[i] = Leg{clause[i], place.slots[i], spine_pos[var - 1]};
    }
    std::sort(legs.begin(), legs.end(), [](const Leg& a, const Leg& b) { return a.pos < b.pos; });
    const Leg& la = legs[0];
    const Leg& lb = legs[1];
    const Leg& lc = legs[2];

    auto check_window = [&](const Leg& leg) {
        const GadgetLabels& g = labels[std::abs(leg.lit) - 1];
        if (leg.slot < 2 || leg.slot + 4 > g.m - 1)
            throw ForbiddenSlot("clause " + std::to_string(clause_idx) + ": column " +
                                std::to_string(leg.slot) + " of variable x" +
                                std::to_string(std::abs(leg.lit)) +
                                " is an end column or its reserved window leaves the gadget");
        if (g.row_positive(place.side, leg.slot) != (leg.lit > 0))
            throw SideMismatch("clause " + std::to_string(clause_idx) + ": literal " +
                               std::to_string(leg.lit) + " is not available on that side at column " +
                               std::to_string(leg.slot));
        booking.reserve(std::abs(leg.lit), place.side, leg.slot, leg.slot + 4, clause_idx);
    };
    check_window(la);
    check_window(lb);
    check_window(lc);

    const GadgetLabels& ga = labels[std::abs(la.lit) - 1];
    const GadgetLabels& gb = labels[std::abs(lb.lit) - 1];
    const GadgetLabels& gc = labels[std::abs(lc.lit) - 1];

    ClauseAttachment att;
    att.alpha = ga.row_vertex(place.side, la.slot);
    att.gamma = gc.row_vertex(place.side, lc.slot);
    for (int i = 0; i < 5; ++i) att.beta[i] = gb.row_vertex(place.side, lb.slot + i);

    att.added_edges = {{att.alpha, att.beta[0]}, {att.beta[4], att.gamma},
                       {att.alpha, att.gamma}};
    for (auto [u, v] : att.added_edges) edges.emplace_back(u, v);

    att.face = canonical_cycle({att.alpha, att.beta[0], att.beta[1], att.beta[2], att.beta[3],
                                att.beta[4], att.gamma});
    return att;
}

// Compiles a placed 3-CNF formula into a tracking instance: one gadget per
// variable chained left to right (t_i = s_{i+1}), tracker-forcing edges
// between consecutive ear vertices, one face per clause, and the tracker
// budget that makes satisfiability and trackability coincide.
inline SatReduction reduce_sat(const CnfFormula& formula, const CnfLayout& layout) {
    int p = formula.num_vars;
    if (p <= 0) throw LayoutInvalid("formula has no variables");
    if (int(layout.order.size()) != p) throw LayoutInvalid("spine order must list every variable");
    {
        std::vector<char> seen(p + 1, 0);
        for (int v : layout.order) {
            if (v < 1 || v > p || seen[v]) throw LayoutInvalid("spine order is not a permutation");
            seen[v] = 1;
        }
    }
    if (layout.clauses.size() != formula.clauses.size())
        throw LayoutInvalid("layout must place every clause exactly once");
    for (const auto& cl : formula.clauses) {
        int a = std::abs(cl[0]), b = std::abs(cl[1]), c = std::abs(cl[2]);
        if (a < 1 || b < 1 || c < 1 || a > p || b > p || c > p)
            throw LayoutInvalid("clause literal out of range");
        if (a == b || a == c || b == c)
            throw LayoutInvalid("clause variables must be distinct");
    }

    std::vector<int> occ(p, 0);
    for (const auto& cl : formula.clauses)
        for (int lit : cl) ++occ[std::abs(lit) - 1];

    std::vector<int> spine_pos(p, -1);
    for (int i = 0; i < p; ++i) spine_pos[layout.order[i] - 1] = i;

    std::vector<std::pair<int, int>> edges;
    std::vector<GadgetLabels> labels(p);
    int next_id = 1;
    int s_global = 0;
    int cursor = s_global;
    std::vector<int> chain_vars;
    for (int i = 0; i < p; ++i) {
        int var = layout.order[i];
        labels[var - 1] = detail::append_gadget(var, gadget_length(occ[var - 1]), cursor,
                                               next_id, edges, i == 0, i == p - 1);
        cursor = labels[var - 1].t;
        chain_vars.push_back(var);
    }
    // forcing edges between consecutive gadgets' ears
    for (int i = 0; i + 1 < p; ++i) {
        const GadgetLabels& left = labels[chain_vars[i] - 1];
        const GadgetLabels& right = labels[chain_vars[i + 1] - 1];
        edges.emplace_back(left.alpha_p, right.alpha);
        edges.emplace_back(left.beta_p, right.beta);
    }

    // lateral disjointness / proper nesting of same-side clauses
    std::vector<long long> offset(p, 0);
    {
        long long off = 0;
        for (int i = 0; i < p; ++i) {
            offset[layout.order[i] - 1] = off;
            off += labels[layout.order[i] - 1].m;
        }
    }
    auto span = [&](int ci) {
        long long lo = 1LL << 62, hi = -1;
        for (int j = 0; j < 3; ++j) {
            int var = std::abs(formula.clauses[ci][j]);
            long long x = offset[var - 1] + layout.clauses[ci].slots[j];
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
        return std::make_pair(lo, hi);
    };
    for (std::size_t i = 0; i < formula.clauses.size(); ++i)
        for (std::size_t j = i + 1; j < formula.clauses.size(); ++j) {
            if (layout.clauses[i].side != layout.clauses[j].side) continue;
            auto [alo, ahi] = span(int(i));
            auto [blo, bhi] = span(int(j));
            bool disjoint = ahi < blo || bhi < alo;
            bool nested = (alo < blo && bhi < ahi) || (blo < alo && ahi < bhi);
            if (!disjoint && !nested)
                throw LayoutInvalid("clauses " + std::to_string(i) + " and " + std::to_string(j) +
                                    " overlap on the same side without nesting");
        }

    SatReduction red;
    detail::SlotBooking booking;
    for (std::size_t ci = 0; ci < formula.clauses.size(); ++ci)
        red.attachments.push_back(build_clause_gadget(edges, labels, spine_pos,
                                                      formula.clauses[ci], layout.clauses[ci],
                                                      int(ci), booking));

    red.instance = Instance(from_edge_list(next_id, edges), s_global, cursor);
    long long target = p - 1;
    for (int v = 0; v < p; ++v) target += 2LL * labels[v].m + 4;
    red.target = target;
    red.labels = std::move(labels);
    return red;
}

// The tracker set of size `target` that a truth assignment induces: every
// non-literal vertex except the global terminals, plus the literal vertices
// whose polarity the assignment makes true.
inline TrackerSet canonical_tracking_set(const SatReduction& red,
                                         const std::vector<bool>& assignment) {
    if (int(assignment.size()) != int(red.labels.size()))
        throw BadParameter("assignment must cover every variable");
    std::vector<int> members;
    for (const auto& g : red.labels) {
        for (int k = 1; k <= g.m; ++k) {
            members.push_back(g.mu[k - 1]);
            bool val = assignment[g.var - 1];
            if (GadgetLabels::h_positive(k) == val) members.push_back(g.h[k - 1]);
            if (GadgetLabels::l_positive(k) == val) members.push_back(g.l[k - 1]);
        }
        members.push_back(g.alpha);
        members.push_back(g.beta);
        members.push_back(g.alpha_p);
        members.push_back(g.beta_p);
        if (g.s != red.instance.s) members.push_back(g.s);
        if (g.t != red.instance.t) members.push_back(g.t);
    }
    return TrackerSet(std::move(members));
}

// DIMACS-CNF subset: "p cnf <vars> <clauses>", clause lines of exactly three
// nonzero literals terminated by 0; 'c' comment lines allowed.
inline CnfFormula read_dimacs_cnf(std::istream& in) {
    CnfFormula f;
    long long expected = -1;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (expected < 0) {
            std::string ptag, kind;
            ls >> ptag >> kind >> f.num_vars >> expected;
            if (!ls || ptag != "p" || kind != "cnf" || f.num_vars < 0 || expected < 0)
                throw ParseError(lineno, "expected 'p cnf <vars> <clauses>'");
            continue;
        }
        std::vector<int> lits;
        int x;
        while (ls >> x) {
            if (x == 0) break;
            lits.push_back(x);
        }
        if (lits.size() != 3) throw ParseError(lineno, "clauses must hold exactly three literals");
        f.clauses.push_back({lits[0], lits[1], lits[2]});
    }
    if (expected < 0) throw ParseError(lineno, "missing problem line");
    if ((long long)(f.clauses.size()) != expected)
        throw ParseError(lineno, "clause count does not match problem line");
    return f;
}

// Layout sidecar: one "order ..." line, then one line per clause:
//   clause <index> side <above|below> slots <ka> <kb> <kc>
inline CnfLayout read_layout(std::istream& in, const CnfFormula& formula) {
    CnfLayout lay;
    lay.clauses.resize(formula.clauses.size());
    std::vector<char> seen(formula.clauses.size(), 0);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "c" || line.rfind("c ", 0) == 0) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "order") {
            int v;
            while (ls >> v) lay.order.push_back(v);
        } else if (tag == "clause") {
            std::size_t idx;
            std::string side_kw, side, slots_kw;
            ClausePlacement pl;
            if (!(ls >> idx >> side_kw >> side >> slots_kw >> pl.slots[0] >> pl.slots[1] >>
                  pl.slots[2]) ||
                side_kw != "side" || slots_kw != "slots" || (side != "above" && side != "below"))
                throw ParseError(lineno,
                                 "expected 'clause <i> side <above|below> slots <ka> <kb> <kc>'");
            if (idx >= lay.clauses.size()) throw ParseError(lineno, "clause index out of range");
            if (seen[idx]) throw ParseError(lineno, "duplicate clause placement");
            seen[idx] = 1;
            lay.clauses[idx] = pl;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i]) throw ParseError(lineno, "clause " + std::to_string(i) + " was never placed");
    return lay;
}

// Labels sidecar: role-name to vertex id map plus the tracker budget.
inline void write_labels(std::ostream& out, const SatReduction& red) {
    for (const auto& g : red.labels) {
        std::string x = "x" + std::to_string(g.var);
        out << x << ".s " << g.s << "\n";
        out << x << ".t " << g.t << "\n";
        out << x << ".alpha " << g.alpha << "\n";
        out << x << ".beta " << g.beta << "\n";
        out << x << ".alphap " << g.alpha_p << "\n";
        out << x << ".betap " << g.beta_p << "\n";
        for (int k = 1; k <= g.m; ++k) {
            out << x << ".h" << k << " " << g.h[k - 1] << "\n";
            out << x << ".mu" << k << " " << g.mu[k - 1] << "\n";
            out << x << ".l" << k << " " << g.l[k - 1] << "\n";
        }
    }
    out << "T " << red.target << "\n";
}

} // namespace trackpath

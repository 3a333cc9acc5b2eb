#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "trackpath/graph.hpp"
#include "trackpath/reduce.hpp"
#include "trackpath/verify.hpp"

namespace trackpath {

// Instance text format (ASCII, newline-delimited):
//   c <comment>          any number, anywhere
//   p track <n> <m>      exactly once, first non-comment line
//   s <id>               exactly once
//   t <id>               exactly once
//   e <u> <v>            exactly m lines, 0-based ids, u != v
inline Instance read_instance(std::istream& in) {
    int n = -1;
    long long m = -1, edges_seen = 0;
    int s = -1, t = -1;
    std::vector<std::pair<int, int>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "p") {
            if (n != -1) throw ParseError(lineno, "duplicate problem line");
            std::string kind;
            ls >> kind >> n >> m;
            if (!ls || kind != "track" || n < 0 || m < 0)
                throw ParseError(lineno, "expected 'p track <n> <m>'");
        } else if (n == -1) {
            throw ParseError(lineno, "problem line must come first");
        } else if (tag == "s") {
            if (s != -1) throw ParseError(lineno, "duplicate source line");
            if (!(ls >> s) || s < 0 || s >= n) throw ParseError(lineno, "bad source id");
        } else if (tag == "t") {
            if (t != -1) throw ParseError(lineno, "duplicate destination line");
            if (!(ls >> t) || t < 0 || t >= n) throw ParseError(lineno, "bad destination id");
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n || u == v)
                throw ParseError(lineno, "bad edge endpoints");
            edges.emplace_back(u, v);
            ++edges_seen;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }
    if (n == -1) throw ParseError(lineno, "missing problem line");
    if (s == -1) throw ParseError(lineno, "missing source line");
    if (t == -1) throw ParseError(lineno, "missing destination line");
    if (edges_seen != m) throw ParseError(lineno, "edge count does not match problem line");
    if (s == t) throw ParseError(lineno, "source equals destination");
    try {
        return Instance(from_edge_list(n, edges), s, t);
    } catch (const MalformedEdge& e) {
        throw ParseError(lineno, e.what());
    }
}

inline void write_instance(std::ostream& out, const Instance& inst,
                           const std::vector<std::string>& comments = {}) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p track " << inst.graph.n << " " << inst.graph.m << "\n";
    out << "s " << inst.s << "\n";
    out << "t " << inst.t << "\n";
    for (auto [u, v] : inst.graph.edges()) out << "e " << u << " " << v << "\n";
}

// Tracker set format: "k <count>" then one id per line, ascending.
inline TrackerSet read_trackers(std::istream& in) {
    std::string line;
    int lineno = 0;
    long long k = -1;
    std::vector<int> members;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        if (k == -1) {
            std::string tag;
            ls >> tag >> k;
            if (!ls || tag != "k" || k < 0) throw ParseError(lineno, "expected 'k <count>'");
        } else {
            int v;
            if (!(ls >> v) || v < 0) throw ParseError(lineno, "expected a vertex id");
            members.push_back(v);
        }
    }
    if (k == -1) throw ParseError(lineno, "missing 'k <count>' line");
    if (k != (long long)(members.size()))
        throw ParseError(lineno, "tracker count does not match header");
    return TrackerSet(std::move(members));
}

inline void write_trackers(std::ostream& out, const TrackerSet& ts) {
    out << "k " << ts.members.size() << "\n";
    for (int v : ts.members) out << v << "\n";
}

// DOT export; trackers are drawn red, terminals as double circles.
inline void write_dot(std::ostream& out, const Instance& inst,
                      const TrackerSet* trackers = nullptr) {
    out << "graph trackpath {\n";
    for (int v = 0; v < inst.graph.n; ++v) {
        out << "  " << v;
        bool term = (v == inst.s || v == inst.t);
        bool tracked = trackers && trackers->contains(v);
        if (term || tracked) {
            out << " [";
            bool first = true;
            if (tracked) {
                out << "color=red";
                first = false;
            }
            if (term) {
                if (!first) out << ", ";
                out << "shape=doublecircle";
            }
            out << "]";
        }
        out << ";\n";
    }
    for (auto [u, v] : inst.graph.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
}

// Trace sidecar emitted next to a reduced instance.
inline void write_trace(std::ostream& out, const ReductionTrace& trace) {
    for (const auto& st : trace.steps) {
        for (int v : st.forced_trackers) out << "rule " << st.rule << " track " << v << "\n";
        for (int v : st.removed_vertices) out << "rule " << st.rule << " drop " << v << "\n";
        for (auto [u, v] : st.removed_edges)
            out << "rule " << st.rule << " edge- " << u << " " << v << "\n";
        for (auto [u, v] : st.added_edges)
            out << "rule " << st.rule << " edge+ " << u << " " << v << "\n";
    }
    for (std::size_t i = 0; i < trace.id_map.size(); ++i)
        out << "map " << i << " " << trace.id_map[i] << "\n";
}

inline void write_violation(std::ostream& out, const Violation& viol) {
    auto path = [&](const VertexPath& p) {
        std::string s;
        for (std::size_t i = 0; i < p.vertices.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(p.vertices[i]);
        }
        return s;
    };
    out << "violation entry " << viol.entry << " exit " << viol.exit << "\n";
    out << "  prefix   " << path(viol.prefix) << "\n";
    out << "  detour-a " << path(viol.detour_a) << "\n";
    out << "  detour-b " << path(viol.detour_b) << "\n";
    out << "  suffix   " << path(viol.suffix) << "\n";
}

} // namespace trackpath

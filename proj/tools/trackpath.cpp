// trackpath — command line front end for the tracking-set toolkit.
//
// Subcommands: reduce, approx, exact, verify, gen, sat, stats.
// Exit codes: 0 success / VALID, 1 INVALID, 2 usage or input error,
// 3 enumeration cap or search budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "trackpath/approx.hpp"
#include "trackpath/exact.hpp"
#include "trackpath/gen.hpp"
#include "trackpath/hardness.hpp"
#include "trackpath/io.hpp"
#include "trackpath/reduce.hpp"
#include "trackpath/verify.hpp"

using namespace trackpath;

namespace {

Caps caps_from_env() {
    Caps caps;
    const char* env = std::getenv("TRACKPATH_CAPS");
    if (!env) return caps;
    std::string raw(env);
    std::istringstream ss(raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw BadParameter("TRACKPATH_CAPS: expected key=value");
        std::string key = item.substr(0, eq);
        unsigned long long val = std::stoull(item.substr(eq + 1));
        if (key == "paths")
            caps.path_cap = val;
        else if (key == "cycles")
            caps.cycle_cap = val;
        else
            throw BadParameter("TRACKPATH_CAPS: unknown key '" + key + "'");
    }
    return caps;
}

Instance load_instance(const std::string& path) {
    if (path.empty() || path == "-") return read_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    return read_instance(in);
}

void maybe_dot(const std::string& dot_path, const Instance& inst, const TrackerSet* ts) {
    if (dot_path.empty()) return;
    std::ofstream out(dot_path);
    if (!out) throw Error("cannot open " + dot_path);
    write_dot(out, inst, ts);
}

int run(int argc, char** argv) {
    CLI::App app{"tracking-set toolkit"};
    app.require_subcommand(1);
    Caps caps = caps_from_env();

    std::string in_path, dot_path, out_path;

    auto* cmd_reduce = app.add_subcommand("reduce", "apply the safe reductions to a fixpoint");
    std::string trace_path;
    cmd_reduce->add_option("--in", in_path, "instance file (default: stdin)");
    cmd_reduce->add_option("--trace", trace_path, "write the reduction trace here");
    cmd_reduce->add_option("--dot", dot_path, "write annotated DOT here");

    auto* cmd_approx = app.add_subcommand(
        "approx",
        "planar approximation with certificate (face arithmetic assumes the caller\n"
        "feeds a planar instance; nothing tests planarity)");
    cmd_approx->add_option("--in", in_path, "instance file (default: stdin)");
    cmd_approx->add_option("--dot", dot_path, "write annotated DOT here");

    auto* cmd_exact = app.add_subcommand("exact", "minimum tracking set by exhaustive search");
    std::optional<int> budget;
    bool count_mode = false;
    int jobs = 1;
    cmd_exact->add_option("--in", in_path, "instance file (default: stdin)");
    cmd_exact->add_option("--budget", budget, "fail with exit 3 if the optimum exceeds this");
    cmd_exact->add_flag("--count", count_mode, "also count the minimum tracking sets");
    cmd_exact->add_option("--jobs", jobs, "parallel candidate checks per cardinality level")
        ->check(CLI::PositiveNumber);
    cmd_exact->add_option("--dot", dot_path, "write annotated DOT here");

    auto* cmd_verify = app.add_subcommand("verify", "check a tracker set");
    std::string trackers_path, method = "cycles";
    bool cross_check = false;
    cmd_verify->add_option("--in", in_path, "instance file (default: stdin)");
    cmd_verify->add_option("--trackers", trackers_path, "tracker set file")->required();
    cmd_verify->add_option("--method", method, "def|cycles|witness")
        ->check(CLI::IsMember({"def", "cycles", "witness"}));
    cmd_verify->add_flag("--cross-check", cross_check, "run all three verifiers and compare");
    cmd_verify->add_option("--dot", dot_path, "write annotated DOT here");

    auto* cmd_gen = app.add_subcommand("gen", "instance generators");
    cmd_gen->require_subcommand(1);
    int k_units = 1, n_rand = 8;
    unsigned seed = 1;
    auto* gen_opt = cmd_gen->add_subcommand("tight-opt", "family meeting the face lower bound");
    gen_opt->add_option("--k", k_units, "unit count")->check(CLI::PositiveNumber);
    auto* gen_alg = cmd_gen->add_subcommand("tight-alg", "family meeting the output upper bound");
    gen_alg->add_option("--k", k_units, "unit count")->check(CLI::PositiveNumber);
    auto* gen_rand = cmd_gen->add_subcommand("random", "seeded random planar instance");
    gen_rand->add_option("--n", n_rand, "vertex count")->check(CLI::PositiveNumber);
    gen_rand->add_option("--seed", seed, "random seed");

    auto* cmd_sat = app.add_subcommand("sat", "compile a placed 3-CNF formula");
    std::string cnf_path, layout_path, labels_path;
    cmd_sat->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
    cmd_sat->add_option("--layout", layout_path, "clause placement sidecar")->required();
    cmd_sat->add_option("--labels", labels_path, "write the role-name map here");

    auto* cmd_stats = app.add_subcommand("stats", "summary line for an instance");
    cmd_stats->add_option("--in", in_path, "instance file (default: stdin)");
    cmd_stats->description(
        "summary line; F is the Euler face count, meaningful only for planar inputs");

    CLI11_PARSE(app, argc, argv);

    if (cmd_reduce->parsed()) {
        Instance inst = load_instance(in_path);
        auto [red, trace] = reduce_fully(inst);
        std::ostringstream hdr;
        hdr << "reduced; forced trackers:";
        for (int v : trace.forced_trackers()) hdr << " " << v;
        write_instance(std::cout, red, {hdr.str()});
        if (!trace_path.empty()) {
            std::ofstream out(trace_path);
            if (!out) throw Error("cannot open " + trace_path);
            write_trace(out, trace);
        }
        maybe_dot(dot_path, red, nullptr);
        return 0;
    }

    if (cmd_approx->parsed()) {
        Instance inst = load_instance(in_path);
        auto cert = algorithm_a(inst);
        std::cout << "ALG " << cert.alg_size << " FACES " << cert.faces << " LB "
                  << cert.opt_lower << "\n";
        write_trackers(std::cout, cert.trackers);
        maybe_dot(dot_path, inst, &cert.trackers);
        return 0;
    }

    if (cmd_exact->parsed()) {
        Instance inst = load_instance(in_path);
        ExactOptions opt;
        opt.budget = budget;
        opt.jobs = jobs;
        opt.caps = caps;
        TrackerSet best = min_tracking_set(inst, opt);
        if (count_mode) {
            auto [optval, cnt] = count_min_tracking_sets(inst, opt);
            std::cout << "OPT " << optval << " COUNT " << cnt << "\n";
        } else {
            std::cout << "OPT " << best.size() << "\n";
        }
        write_trackers(std::cout, best);
        maybe_dot(dot_path, inst, &best);
        return 0;
    }

    if (cmd_verify->parsed()) {
        Instance inst = load_instance(in_path);
        std::ifstream tin(trackers_path);
        if (!tin) throw Error("cannot open " + trackers_path);
        TrackerSet ts = read_trackers(tin);
        maybe_dot(dot_path, inst, &ts);

        bool valid;
        std::optional<Violation> viol;
        if (cross_check) {
            bool by_def = verify_by_definition(inst, ts, caps);
            bool by_cyc = verify_by_cycles(inst, ts, caps);
            viol = find_violation(inst, ts, caps);
            bool by_wit = !viol.has_value();
            if (by_def != by_cyc || by_cyc != by_wit)
                throw Error("verifier disagreement: def=" + std::to_string(by_def) +
                            " cycles=" + std::to_string(by_cyc) +
                            " witness=" + std::to_string(by_wit));
            valid = by_def;
        } else if (method == "def") {
            valid = verify_by_definition(inst, ts, caps);
            if (!valid) viol = find_violation(inst, ts, caps);
        } else if (method == "witness") {
            viol = find_violation(inst, ts, caps);
            valid = !viol.has_value();
        } else {
            valid = verify_by_cycles(inst, ts, caps);
            if (!valid) viol = find_violation(inst, ts, caps);
        }
        if (valid) {
            std::cout << "VALID\n";
            return 0;
        }
        std::cout << "INVALID\n";
        if (viol) write_violation(std::cout, *viol);
        return 1;
    }

    if (cmd_gen->parsed()) {
        Instance inst;
        std::string comment;
        if (gen_opt->parsed()) {
            inst = gen_tight_opt(k_units);
            comment = "tight-opt k=" + std::to_string(k_units);
        } else if (gen_alg->parsed()) {
            inst = gen_tight_alg(k_units);
            comment = "tight-alg k=" + std::to_string(k_units);
        } else {
            inst = gen_random_planar(n_rand, seed);
            comment = "random n=" + std::to_string(n_rand) + " seed=" + std::to_string(seed);
        }
        write_instance(std::cout, inst, {comment});
        return 0;
    }

    if (cmd_sat->parsed()) {
        std::ifstream cin_(cnf_path);
        if (!cin_) throw Error("cannot open " + cnf_path);
        CnfFormula formula = read_dimacs_cnf(cin_);
        std::ifstream lin(layout_path);
        if (!lin) throw Error("cannot open " + layout_path);
        CnfLayout layout = read_layout(lin, formula);
        SatReduction red = reduce_sat(formula, layout);
        write_instance(std::cout, red.instance,
                       {"compiled 3-CNF instance", "T " + std::to_string(red.target)});
        if (!labels_path.empty()) {
            std::ofstream out(labels_path);
            if (!out) throw Error("cannot open " + labels_path);
            write_labels(out, red);
        }
        return 0;
    }

    if (cmd_stats->parsed()) {
        Instance inst = load_instance(in_path);
        const Graph& g = inst.graph;
        auto dec = biconnected_components(g);
        std::cout << "n=" << g.n << " m=" << g.m << " F=";
        if (is_connected(g))
            std::cout << face_count(g);
        else
            std::cout << "?";
        std::cout << " blocks=" << dec.blocks.size() << "\n";
        int maxdeg = 0;
        for (int v = 0; v < g.n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        std::vector<int> hist(maxdeg + 1, 0);
        for (int v = 0; v < g.n; ++v) ++hist[g.degree(v)];
        std::cout << "deg";
        for (int d = 0; d <= maxdeg; ++d)
            if (hist[d]) std::cout << " " << d << ":" << hist[d];
        std::cout << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

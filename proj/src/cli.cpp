#include "termcut/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "termcut/certificate.hpp"
#include "termcut/conditions.hpp"
#include "termcut/error.hpp"
#include "termcut/generate.hpp"
#include "termcut/graph.hpp"
#include "termcut/io_json.hpp"
#include "termcut/lp.hpp"
#include "termcut/lp_cuts.hpp"
#include "termcut/typevec.hpp"

namespace termcut {

namespace {

TypeVector load_tv(const std::string& path, bool require_complete = false) {
    return tv_from_json(load_json(path), require_complete);
}

// Align a vector's terminal order with the graph's.
TypeVector align(const TypeVector& v, const Graph& g, const char* label) {
    if (v.terminals() == g.terminal_ids()) return v;
    try {
        return v.reordered(g.terminal_ids());
    } catch (const InvalidInput&) {
        throw InvalidInput(std::string(label) + ": terminal set differs from the graph's");
    }
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
        return;
    }
    std::ofstream file(path);
    if (!file) throw InvalidInput("cannot write file: " + path);
    file << content;
}

std::string decimal_suffix(const Rat& v, bool enabled) {
    if (!enabled) return "";
    std::ostringstream s;
    s << " (~" << rat_approx(v) << ")";
    return s.str();
}

int cmd_cutvec(const std::string& graph_path, std::ostream& out) {
    Graph g = Graph::load(graph_path);
    out << dump_json(tv_to_json(cut_vector(g)));
    return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& beta_path,
               const std::string& gamma_path, bool emit_certificate,
               const std::string& output_path, std::ostream& out) {
    Graph g = Graph::load(graph_path);
    TypeVector beta = align(load_tv(beta_path), g, "beta");
    TypeVector gamma = align(load_tv(gamma_path), g, "gamma");
    Theorem1Result result = verify_theorem1(g, beta, gamma);

    if (!result.laminar_ok) {
        out << "premise: not laminar (supp(gamma) contains a crossing pair)\n";
        return kExitViolation;
    }
    if (!result.dominance_ok) {
        const auto& ids = g.terminal_ids();
        out << "premise: dominance fails at pair (" << ids[result.dominance_witness.first]
            << "," << ids[result.dominance_witness.second] << ")\n";
        return kExitViolation;
    }
    out << "cut(beta) = " << rat_str(result.lhs) << "\n";
    out << "cut(gamma) = " << rat_str(result.rhs) << "\n";
    bool ok = result.holds();
    out << "inequality " << (result.inequality_ok ? "holds" : "VIOLATED")
        << (result.lhs == result.rhs ? " with equality" : "") << "\n";
    if (!result.report.all_ok() || !result.obs_dist_ok || !result.obs_total_ok) {
        out << "certificate checks failed:\n";
        for (const std::string& f : result.report.failures) out << "  " << f << "\n";
    }
    if (emit_certificate)
        write_output(output_path, dump_json(certificate_to_json(g, beta, gamma, result)), out);
    return ok ? kExitOk : kExitViolation;
}

int cmd_count_approx(const std::string& graph_path, int alpha, bool decimal,
                     std::ostream& out) {
    Graph g = Graph::load(graph_path);
    KargerResult result = verify_karger_bound(g, alpha);
    out << "count=" << result.count << " bound=" << result.bound
        << " Pi=" << rat_str(result.pi_min) << decimal_suffix(result.pi_min, decimal) << " "
        << (result.ok ? "ok" : "EXCEEDED") << "\n";
    return result.ok ? kExitOk : kExitViolation;
}

int cmd_lp(const std::string& metric_path, const std::string& beta_path,
           const std::string& graph_path, int alpha, bool decimal, std::ostream& out) {
    std::optional<TerminalMetric> metric;
    if (!metric_path.empty()) {
        metric = metric_from_json(load_json(metric_path));
    } else if (!beta_path.empty()) {
        metric = induced_metric(load_tv(beta_path));
    } else if (!graph_path.empty()) {
        Graph g = Graph::load(graph_path);
        KargerResult karger = verify_karger_bound(g, alpha);
        TypeVector pi = cut_vector(g);
        TypeVector beta(g.terminal_ids());
        Rat threshold = Rat(alpha) * karger.pi_min;
        Mask full = full_mask(g.terminal_count());
        for (Mask s = 1; s < full; ++s)
            if (pi.value(s) <= threshold) beta.set(s, Rat(1));
        metric = induced_metric(beta);
    } else {
        throw InvalidInput("lp: give --metric, --beta, or --graph");
    }

    LPSolution primal = solve_lp(build_primal(*metric));
    LPSolution dual = solve_lp(build_dual(*metric));
    if (primal.status != LPStatus::Optimal || dual.status != LPStatus::Optimal)
        throw std::logic_error("lp: both programs should be feasible and bounded");
    SpanningTree tree = mst(*metric);
    TypeVector gamma = uncross_to_laminar(primal_solution_to_typevector(*metric, primal));

    out << "primal optimum = " << rat_str(primal.value)
        << decimal_suffix(primal.value, decimal) << "\n";
    out << "dual optimum = " << rat_str(dual.value) << decimal_suffix(dual.value, decimal)
        << "\n";
    out << "strong duality " << (primal.value == dual.value ? "holds" : "VIOLATED") << "\n";
    out << "mst cost = " << rat_str(tree.cost) << decimal_suffix(tree.cost, decimal) << "\n";
    out << "mst within factor 2 of dual: "
        << (tree.cost <= Rat(2) * dual.value ? "yes" : "NO") << "\n";
    out << "uncrossed laminar gamma:\n" << dump_json(tv_to_json(gamma));
    bool ok = primal.value == dual.value && dual.value <= tree.cost &&
              tree.cost <= Rat(2) * dual.value && is_laminar(gamma.support());
    return ok ? kExitOk : kExitViolation;
}

int cmd_check(const std::string& pi_path, bool as_json, std::ostream& out) {
    TypeVector pi = load_tv(pi_path, /*require_complete=*/true);
    FullReport report = full_report(pi);
    if (as_json)
        out << dump_json(report_to_json(report, pi));
    else
        out << report_table(report, pi);
    return report.clean() ? kExitOk : kExitViolation;
}

int cmd_random(const std::string& kind, std::uint64_t seed, int vertices, int terminals,
               int extra_edges, const std::string& gamma_path, const std::string& output_path,
               std::ostream& out) {
    Rng rng(seed);
    if (kind == "graph") {
        GraphParams params;
        params.vertices = vertices;
        params.terminals = terminals;
        params.extra_edges = extra_edges;
        write_output(output_path, random_graph(rng, params).emit(), out);
        return kExitOk;
    }
    std::vector<std::string> names;
    for (int i = 1; i <= terminals; ++i) names.push_back("t" + std::to_string(i));
    if (kind == "laminar-gamma") {
        write_output(output_path, dump_json(tv_to_json(random_laminar_gamma(rng, names))), out);
        return kExitOk;
    }
    if (kind == "dominating-beta") {
        if (gamma_path.empty())
            throw InvalidInput("random --kind dominating-beta needs --gamma");
        TypeVector gamma = load_tv(gamma_path);
        write_output(output_path, dump_json(tv_to_json(dominating_beta(rng, gamma))), out);
        return kExitOk;
    }
    throw InvalidInput("unknown kind: " + kind);
}

int cmd_chain(const std::string& graph_path, int alpha, std::ostream& out) {
    Graph g = Graph::load(graph_path);
    ChainReport report = theorem2_chain(g, alpha);
    out << dump_json(chain_to_json(report));
    return report.all_ok() ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"terminal cut functions: cut vectors, laminar-inequality certificates, "
                 "exact LP machinery, and approximate-cut counting"};
    app.require_subcommand(1);

    std::string graph_path, beta_path, gamma_path, pi_path, metric_path, output_path, kind;
    int alpha = 1;
    bool emit_certificate = false, as_json = false, decimal = false;
    std::uint64_t seed = 1;
    int vertices = 8, terminals = 4, extra_edges = 6;

    CLI::App* cutvec = app.add_subcommand("cutvec", "print the cut vector of a graph");
    cutvec->add_option("graph", graph_path, "graph file")->required();

    CLI::App* verify =
        app.add_subcommand("verify", "check the laminar-inequality premises and inequality");
    verify->add_option("graph", graph_path, "graph file")->required();
    verify->add_option("--beta", beta_path, "type-vector JSON")->required();
    verify->add_option("--gamma", gamma_path, "type-vector JSON")->required();
    verify->add_flag("--certificate", emit_certificate, "emit the length decomposition");
    verify->add_option("--output", output_path, "write the certificate here");

    CLI::App* count =
        app.add_subcommand("count-approx", "count terminal cuts within alpha of minimum");
    count->add_option("graph", graph_path, "graph file")->required();
    count->add_option("--alpha", alpha, "approximation factor")->required();
    count->add_flag("--decimal", decimal, "also print decimal approximations");

    CLI::App* lp = app.add_subcommand("lp", "solve the packing LP and its dual for a metric");
    lp->add_option("--metric", metric_path, "metric JSON");
    lp->add_option("--beta", beta_path, "type-vector JSON (metric induced)");
    lp->add_option("--graph", graph_path, "graph file (indicator of alpha-approximate cuts)");
    lp->add_option("--alpha", alpha, "used with --graph");
    lp->add_flag("--decimal", decimal, "also print decimal approximations");

    CLI::App* check = app.add_subcommand("check", "run all necessary-condition checks");
    check->add_option("pi", pi_path, "complete type-vector JSON")->required();
    check->add_flag("--json", as_json, "emit the report as JSON");

    CLI::App* random = app.add_subcommand("random", "emit seeded random instances");
    random->add_option("--kind", kind, "graph | laminar-gamma | dominating-beta")->required();
    random->add_option("--seed", seed, "64-bit seed")->required();
    random->add_option("--vertices", vertices, "vertex count (graph)");
    random->add_option("--terminals", terminals, "terminal count");
    random->add_option("--extra-edges", extra_edges, "edges beyond the spanning tree (graph)");
    random->add_option("--gamma", gamma_path, "gamma file (dominating-beta)");
    random->add_option("--output", output_path, "write here instead of stdout");

    CLI::App* chain = app.add_subcommand("chain", "run the counting-theorem object chain");
    chain->add_option("graph", graph_path, "graph file")->required();
    chain->add_option("--alpha", alpha, "approximation factor")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (cutvec->parsed()) return cmd_cutvec(graph_path, out);
        if (verify->parsed())
            return cmd_verify(graph_path, beta_path, gamma_path, emit_certificate, output_path,
                              out);
        if (count->parsed()) return cmd_count_approx(graph_path, alpha, decimal, out);
        if (lp->parsed())
            return cmd_lp(metric_path, beta_path, graph_path, alpha, decimal, out);
        if (check->parsed()) return cmd_check(pi_path, as_json, out);
        if (random->parsed())
            return cmd_random(kind, seed, vertices, terminals, extra_edges, gamma_path,
                              output_path, out);
        if (chain->parsed()) return cmd_chain(graph_path, alpha, out);
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const DegenerateInstance& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace termcut

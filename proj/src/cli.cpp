#include "fintop/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "fintop/aggregate.hpp"
#include "fintop/expr.hpp"
#include "fintop/render.hpp"
#include "fintop/topology.hpp"
#include "fintop/verify.hpp"

namespace fintop {

using nlohmann::json;

namespace {

struct Shared {
    unsigned workers = 1;
    int budget_edges = 24;
    bool json = false;

    EnumerationOptions options() const { return {budget_edges, std::max(1U, workers)}; }
};

GraphExpr graph_argument(const std::string& expr_text, const std::string& file) {
    if (!expr_text.empty() && !file.empty()) throw Error(Errc::syntax_error, "give an expression or --file, not both");
    if (!file.empty()) {
        GraphExpr e;
        e.kind = GraphExpr::Kind::file;
        e.path = file;
        return e;
    }
    if (expr_text.empty()) throw Error(Errc::syntax_error, "missing graph expression");
    return parse_graph_expr(expr_text);
}

int cmd_count(const Shared& shared, const GraphExpr& expr, const std::string& method_text, bool timing,
              std::ostream& out) {
    Graph g = evaluate(expr);
    EnumerationOptions options = shared.options();
    CountCache cache;
    std::optional<FormulaResult> formula = formula_for(expr, options, cache);

    CountReport report;
    if (method_text == "formula") {
        auto start = std::chrono::steady_clock::now();
        if (!formula || !formula->h) throw Error(Errc::range, "no closed form covers " + to_string(expr));
        report.graph = canonical_code(g);
        report.tau = *formula->tau;
        report.h = *formula->h;
        report.method = CountMethod::formula;
        report.elapsed = std::chrono::steady_clock::now() - start;
    } else {
        report = count_graph(g, method_text == "burnside" ? CountMethod::burnside : CountMethod::enumeration, options);
    }

    if (shared.json) {
        json doc = count_report_json(report, timing);
        doc["expr"] = to_string(expr);
        doc["edges"] = g.edge_count();
        doc["formula"] = formula ? formula_json(*formula) : json(nullptr);
        out << doc.dump() << '\n';
        return 0;
    }
    out << "graph    " << to_string(expr) << " (" << g.order() << " vertices, " << g.edge_count() << " edges)\n";
    out << "tau      " << report.tau << '\n';
    out << "h        " << report.h << '\n';
    out << "method   " << method_name(report.method) << '\n';
    if (formula) {
        auto text = [](std::optional<Count> v) { return v ? std::to_string(*v) : std::string("n/a"); };
        out << "formula  " << formula->theorem << ": tau=" << text(formula->tau) << " h=" << text(formula->h) << '\n';
    }
    if (timing) out << "elapsed  " << std::chrono::duration<double, std::milli>(report.elapsed).count() << " ms\n";
    return 0;
}

int cmd_enumerate(const Shared& shared, const GraphExpr& expr, bool dot, bool with_topology, bool classes_only,
                  std::ostream& out) {
    Graph g = evaluate(expr);
    EnumerationOptions options = shared.options();
    std::vector<Digraph> digraphs = enumerate_transitive_digraphs(g, options);
    if (classes_only) digraphs = digraph_classes(digraphs).representatives;

    auto line = [&](const Digraph& d) {
        json row;
        row["arcs"] = arcs_json(d);
        if (with_topology) row["topology"] = topology_json(topology_from_preorder(digraph_to_preorder(d)));
        return row;
    };
    if (shared.json) {
        json doc;
        doc["expr"] = to_string(expr);
        doc["n"] = g.order();
        doc["count"] = digraphs.size();
        doc["digraphs"] = json::array();
        for (const auto& d : digraphs) doc["digraphs"].push_back(line(d));
        out << doc.dump() << '\n';
        return 0;
    }
    for (std::size_t i = 0; i < digraphs.size(); ++i) {
        if (dot) {
            out << digraph_dot(digraphs[i], "D" + std::to_string(i));
        } else {
            out << line(digraphs[i]).dump() << '\n';
        }
    }
    return 0;
}

int cmd_aggregate(const Shared& shared, int n, bool allow_large, bool timing, std::ostream& out) {
    AggregateResult r = aggregate_counts(n, shared.options(), allow_large);
    if (shared.json) {
        json doc = aggregate_summary_json(r);
        doc["classes"] = json::array();
        for (std::size_t i = 0; i < r.table.entries.size(); ++i) {
            const auto& e = r.table.entries[i];
            json row = {{"class_index", i},        {"graph", e.code.to_hex()}, {"edge_count", e.representative.edge_count()},
                        {"aut_order", e.aut_order}, {"tau", e.tau},             {"h", e.h},
                        {"labeled_copies", e.labeled_copies(n)}};
            if (timing) row["elapsed_ms"] = std::chrono::duration<double, std::milli>(e.elapsed).count();
            doc["classes"].push_back(row);
        }
        out << doc.dump() << '\n';
        return 0;
    }
    out << aggregate_csv(r);
    if (timing) {
        for (std::size_t i = 0; i < r.table.entries.size(); ++i) {
            out << "# class " << i << ": "
                << std::chrono::duration<double, std::milli>(r.table.entries[i].elapsed).count() << " ms\n";
        }
    }
    out << aggregate_summary_json(r).dump() << '\n';
    return 0;
}

int cmd_verify(const Shared& shared, const std::string& suite_text, const std::vector<std::string>& corrupt,
               std::ostream& out) {
    VerifySuite suite = suite_text == "formulas"  ? VerifySuite::formulas
                        : suite_text == "oracles" ? VerifySuite::oracles
                                                  : VerifySuite::all;
    EnumerationOptions options = shared.options();
    CountCache cache;
    for (const auto& text : corrupt) {
        Graph g = evaluate(parse_graph_expr(text));
        GraphCounts real = enumeration_counts(g, options);
        cache.overwrite(canonical_code(g), {real.tau + 1, real.h});
    }
    VerifyReport report = run_verify(suite, options, cache, shared.json ? nullptr : &out);
    if (shared.json) {
        json doc;
        doc["passed"] = report.all_passed();
        doc["checks"] = json::array();
        for (const auto& c : report.checks) {
            doc["checks"].push_back({{"name", c.name},
                                     {"pass", c.pass},
                                     {c.expected_label, c.expected},
                                     {c.actual_label, c.actual}});
        }
        out << doc.dump() << '\n';
    } else {
        out << report.checks.size() << " checks, " << report.failures() << " failed\n";
    }
    return report.all_passed() ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Counts the topologies on a finite set whose underlying graph is a given graph."};
    app.name("fintop");
    app.require_subcommand(1);
    app.fallthrough();

    Shared shared;
    app.add_option("--workers", shared.workers, "Search threads (results do not depend on it)")
        ->check(CLI::Range(1U, 256U));
    app.add_option("--budget-edges", shared.budget_edges, "Refuse graphs with more edges than this")
        ->check(CLI::Range(0, kMaxVertices * (kMaxVertices - 1) / 2));
    app.add_flag("--json", shared.json, "Emit one JSON document on standard output");

    std::string expr_text, file, method = "enumeration";
    bool timing = false;
    auto* count = app.add_subcommand("count", "tau(G) and h(G) for one graph");
    count->add_option("expr", expr_text, "Graph expression, e.g. box(K2,C4)");
    count->add_option("--file", file, "Edge-list file instead of an expression");
    count->add_option("--method", method, "How h is computed")
        ->check(CLI::IsMember({"enumeration", "burnside", "formula"}));
    count->add_flag("--timing", timing, "Report elapsed time");

    bool dot = false, jsonl = false, with_topology = false, classes_only = false;
    auto* enumerate = app.add_subcommand("enumerate", "List transitive digraphs over a graph");
    enumerate->add_option("expr", expr_text, "Graph expression");
    enumerate->add_option("--file", file, "Edge-list file instead of an expression");
    auto* dot_flag = enumerate->add_flag("--dot", dot, "Graphviz output");
    enumerate->add_flag("--jsonl", jsonl, "One JSON object per line (default)")->excludes(dot_flag);
    enumerate->add_flag("--topology", with_topology, "Include the open sets of each topology");
    enumerate->add_flag("--classes", classes_only, "Only the first member of each isomorphism class");

    int n = 0;
    bool allow_large = false;
    auto* aggregate = app.add_subcommand("aggregate", "Sum over all graphs on n vertices");
    aggregate->add_option("-n", n, "Vertex count")->required();
    aggregate->add_flag("--allow-large", allow_large, "Permit n = 7");
    aggregate->add_flag("--timing", timing, "Report per-class timing");

    std::string suite = "all";
    std::vector<std::string> corrupt;
    auto* verify = app.add_subcommand("verify", "Run the formula and oracle cross-checks");
    verify->add_option("--suite", suite, "Which checks to run")->check(CLI::IsMember({"all", "formulas", "oracles"}));
    verify->add_option("--corrupt-memo", corrupt, "Test hook: plant a wrong cached count for a graph")
        ->group("");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*count) return cmd_count(shared, graph_argument(expr_text, file), method, timing, out);
        if (*enumerate) return cmd_enumerate(shared, graph_argument(expr_text, file), dot, with_topology, classes_only, out);
        if (*aggregate) return cmd_aggregate(shared, n, allow_large, timing, out);
        if (*verify) return cmd_verify(shared, suite, corrupt, out);
    } catch (const Error& e) {
        err << "fintop: " << e.what() << '\n';
        return e.code() == Errc::internal_error ? 2 : 1;
    } catch (const std::exception& e) {
        err << "fintop: internal-error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace fintop

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "fintop/cli.hpp"
#include "fintop/expr.hpp"
#include "fintop/render.hpp"
#include "fintop/symmetry.hpp"
#include "fintop/topology.hpp"
#include "fintop/verify.hpp"

using namespace fintop;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::pair<Errc, std::size_t> parse_failure(std::string_view text) {
    try {
        parse_graph_expr(text);
    } catch (const ParseError& e) {
        return {e.code(), e.offset()};
    }
    return {Errc::internal_error, 0};
}

std::string temp_graph_file(const Graph& g) {
    std::string path = "fintop_test_graph.txt";
    std::ofstream f(path);
    write_edge_list(f, g);
    return path;
}

GraphExpr random_expr(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 3 : 0);
    GraphExpr e;
    switch (pick(rng)) {
        case 0: {
            const Family fams[] = {Family::complete, Family::cycle, Family::wheel, Family::path, Family::null};
            e.family = fams[std::uniform_int_distribution<int>(0, 4)(rng)];
            e.size = std::uniform_int_distribution<int>(4, 6)(rng);
            break;
        }
        case 1:
            e.kind = GraphExpr::Kind::union_of;
            e.operands = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
            break;
        case 2:
            e.kind = GraphExpr::Kind::box;
            e.operands = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
            break;
        default:
            e.kind = GraphExpr::Kind::amalgam;
            e.operands = {random_expr(rng, depth - 1), random_expr(rng, depth - 1)};
            e.left_anchor = std::uniform_int_distribution<int>(0, 3)(rng);
            e.right_anchor = std::uniform_int_distribution<int>(0, 3)(rng);
            break;
    }
    return e;
}

}  // namespace

TEST_CASE("expression parsing") {
    GraphExpr k4 = parse_graph_expr("K4");
    CHECK(k4.kind == GraphExpr::Kind::named);
    CHECK(k4.family == Family::complete);
    CHECK(k4.size == 4);

    GraphExpr h = parse_graph_expr("union(K2,N1)");
    CHECK(h.kind == GraphExpr::Kind::union_of);
    CHECK(evaluate(h) == disjoint_union(build_named(Family::complete, 2), build_named(Family::null, 1)));

    CHECK(parse_graph_expr(" box ( K2 ,\tC4 ) ") == parse_graph_expr("box(K2,C4)"));
    GraphExpr a = parse_graph_expr("amalgam(K3@0, K2@1)");
    CHECK(a.left_anchor == 0);
    CHECK(a.right_anchor == 1);
    CHECK(vertex_count(a) == 4);
    CHECK(vertex_count(parse_graph_expr("box(P2,C4)")) == 12);
    CHECK(parse_graph_expr("file(\"x y.txt\")").path == "x y.txt");
}

TEST_CASE("expression errors carry offsets") {
    CHECK(parse_failure("C2") == std::pair{Errc::invalid_family_size, std::size_t{0}});
    CHECK(parse_failure("union(K2, W3)") == std::pair{Errc::invalid_family_size, std::size_t{10}});
    CHECK(parse_failure("K") == std::pair{Errc::syntax_error, std::size_t{1}});
    CHECK(parse_failure("X4") == std::pair{Errc::syntax_error, std::size_t{0}});
    CHECK(parse_failure("union(K2 K3)") == std::pair{Errc::syntax_error, std::size_t{9}});
    CHECK(parse_failure("K2)") == std::pair{Errc::syntax_error, std::size_t{2}});
    CHECK(parse_failure("") == std::pair{Errc::syntax_error, std::size_t{0}});
    CHECK(parse_failure("amalgam(K3@3,K2@0)") == std::pair{Errc::vertex_out_of_range, std::size_t{11}});
    CHECK(parse_failure("amalgam(K3@0,P1@2)") == std::pair{Errc::vertex_out_of_range, std::size_t{16}});
    CHECK(parse_failure("K65").first == Errc::size_bound_exceeded);
    CHECK(parse_failure("file(\"abc)").first == Errc::syntax_error);
}

TEST_CASE("expressions round-trip through text") {
    std::mt19937 rng(41);
    for (int i = 0; i < 300; ++i) {
        GraphExpr e = random_expr(rng, 3);
        std::string text = to_string(e);
        CHECK(parse_graph_expr(text) == e);
        CHECK(to_string(parse_graph_expr(text)) == text);
    }
}

TEST_CASE("formula dispatch") {
    CountCache cache;
    EnumerationOptions opts;
    auto f = formula_for(parse_graph_expr("W7"), opts, cache);
    REQUIRE(f);
    CHECK(f->tau == 4);
    CHECK(f->h == 2);
    auto box = formula_for(parse_graph_expr("box(K2,C4)"), opts, cache);
    REQUIRE(box);
    CHECK(box->tau == 2);
    auto u = formula_for(parse_graph_expr("union(K2,N1)"), opts, cache);
    REQUIRE(u);
    CHECK(u->tau == 3);
    CHECK(u->h == 2);
    auto bow = formula_for(parse_graph_expr("amalgam(K3@0,K3@0)"), opts, cache);
    REQUIRE(bow);
    CHECK(bow->tau == 18);
    CHECK(bow->h == 6);
}

TEST_CASE("rendering") {
    Topology t = validate_topology({0, 1, 3}, 2);
    CHECK(topology_json(t).dump() == "[[],[0],[0,1]]");
    Digraph d(3);
    d.add_arc(0, 1);
    d.add_arc(1, 0);
    d.add_arc(0, 2);
    CHECK(arcs_json(d).dump() == "[[0,1],[0,2],[1,0]]");
    std::string dot = digraph_dot(d, "D0");
    CHECK(dot.find("0 -> 1") != std::string::npos);
    CHECK(dot.find("1 -> 0") != std::string::npos);
    CHECK(formula_json(FormulaResult{5, std::nullopt, "x"}).dump().find("not-applicable") != std::string::npos);
}

TEST_CASE("verify suites") {
    CountCache cache;
    auto oracles = run_verify(VerifySuite::oracles, {}, cache);
    CHECK(oracles.all_passed());
    CHECK(oracles.checks.size() > 10);

    CountCache fresh;
    auto formulas = run_verify(VerifySuite::formulas, {}, fresh);
    auto find = [&](const std::string& name) -> const CheckResult* {
        for (auto& c : formulas.checks)
            if (c.name == name) return &c;
        return nullptr;
    };
    auto k4 = find("complete K4");
    REQUIRE(k4);
    CHECK(k4->pass);
    CHECK(format_check(*k4).rfind("PASS", 0) == 0);
    CHECK(format_check(*k4).find("75") != std::string::npos);
    auto w6 = find("wheel W6");
    REQUIRE(w6);
    CHECK(w6->pass);
    // the five-vertex wheel closed form does not match enumeration
    auto w5 = find("wheel W5");
    REQUIRE(w5);
    CHECK_FALSE(w5->pass);
    CHECK(formulas.failures() == 1);
}

TEST_CASE("oracle helpers") {
    const std::size_t preorders[] = {1, 1, 4, 29, 355};
    for (int n = 0; n <= 4; ++n) CHECK(oracle::all_preorders(n).size() == preorders[n]);
    CHECK(oracle::ordered_set_partitions(4) == 75);
    CHECK(oracle::compositions(5) == 16);
}

TEST_CASE("cli count") {
    auto r = run({"count", "K4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("75") != std::string::npos);

    auto j = run({"--json", "count", "box(K2,C4)"});
    REQUIRE(j.code == 0);
    json doc = json::parse(j.out);
    CHECK(doc["tau"] == 2);
    CHECK(doc["h"] == 1);
    CHECK(doc.find("elapsed_ms") == doc.end());

    auto f = run({"count", "C6", "--method", "formula", "--json"});
    REQUIRE(f.code == 0);
    CHECK(json::parse(f.out)["method"] == "formula");

    auto b = run({"count", "K3", "--method", "burnside", "--json"});
    CHECK(json::parse(b.out)["h"] == 4);

    std::string path = temp_graph_file(build_named(Family::path, 2));
    auto viafile = run({"count", "--file", path, "--json"});
    CHECK(viafile.code == 0);
    CHECK(json::parse(viafile.out)["tau"] == 2);
    auto inexpr = run({"count", "file(\"" + path + "\")", "--json"});
    CHECK(json::parse(inexpr.out)["tau"] == 2);
    std::remove(path.c_str());
}

TEST_CASE("cli json output is one document and deterministic") {
    auto one = run({"--workers", "1", "count", "box(K2,C4)", "--json"});
    auto eight = run({"--workers", "8", "count", "box(K2,C4)", "--json"});
    CHECK(one.out == eight.out);
    CHECK(one.err.empty());
    CHECK(json::accept(one.out));

    for (auto args : std::vector<std::vector<std::string>>{
             {"--json", "enumerate", "K3"}, {"--json", "aggregate", "-n", "3"}, {"--json", "verify", "--suite", "oracles"}}) {
        auto r = run(args);
        CHECK(r.code == 0);
        CHECK(json::accept(r.out));
    }
}

TEST_CASE("cli enumerate") {
    auto r = run({"enumerate", "K3"});
    CHECK(r.code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
    auto c = run({"enumerate", "K3", "--classes", "--topology"});
    CHECK(std::count(c.out.begin(), c.out.end(), '\n') == 4);
    CHECK(c.out.find("topology") != std::string::npos);
    auto d = run({"enumerate", "K2", "--dot"});
    CHECK(d.out.find("digraph") != std::string::npos);
    CHECK(run({"enumerate", "C5"}).out.empty());
}

TEST_CASE("cli aggregate") {
    auto r = run({"aggregate", "-n", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("class_index,edge_count,aut_order,tau,h,labeled_copies\n", 0) == 0);
    CHECK(r.out.find("{\"h_n\":33,\"n\":4,\"tau_n\":355}") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 11 + 1);
    CHECK(run({"aggregate", "-n", "7"}).code == 1);
}

TEST_CASE("cli exit codes") {
    CHECK(run({}).code == 1);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({"count", "C2"}).code == 1);
    CHECK(run({"count", "union(K2"}).code == 1);
    CHECK(run({"count", "K8"}).code == 1);
    CHECK(run({"count", "K4", "--method", "formula"}).code == 0);
    CHECK(run({"count", "P3", "--method", "formula"}).code == 0);
    CHECK(run({"count", "--file", "/nonexistent"}).code == 1);
    CHECK(run({"--workers", "0", "count", "K2"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    auto bad = run({"count", "C2"});
    CHECK(bad.out.empty());
    CHECK(bad.err.find("invalid-family-size") != std::string::npos);
}

TEST_CASE("cli verify and the corrupted memo hook") {
    CHECK(run({"verify", "--suite", "oracles"}).code == 0);

    auto clean = run({"verify", "--suite", "formulas"});
    auto broken = run({"verify", "--suite", "formulas", "--corrupt-memo", "K4"});
    CHECK(broken.code == 2);
    CHECK(clean.out.find("PASS  complete K4") != std::string::npos);
    CHECK(broken.out.find("FAIL  complete K4") != std::string::npos);
    CHECK(broken.out.find("76") != std::string::npos);
}

#include "fintop/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "fintop/aggregate.hpp"
#include "fintop/formulas.hpp"
#include "fintop/topology.hpp"

namespace fintop {

bool VerifyReport::all_passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.pass; }));
}

std::string format_check(const CheckResult& c) {
    return std::string(c.pass ? "PASS" : "FAIL") + "  " + c.name + ": " + c.expected_label + " " + c.expected +
           " | " + c.actual_label + " " + c.actual;
}

namespace oracle {

std::vector<std::vector<VertexSet>> all_preorders(int n) {
    if (n < 0 || n > 5) throw Error(Errc::range, "preorder oracle limited to 5 points");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pairs.emplace_back(x, y);
    std::vector<std::vector<VertexSet>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<VertexSet> rows(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) rows[x] = bit(x);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) rows[pairs[i].first] |= bit(pairs[i].second);
        bool transitive = true;
        for (int x = 0; x < n && transitive; ++x)
            for (int y = 0; y < n && transitive; ++y)
                for (int z = 0; z < n && transitive; ++z)
                    if (((rows[x] >> y) & 1U) && ((rows[y] >> z) & 1U) && !((rows[x] >> z) & 1U)) transitive = false;
        if (transitive) out.push_back(std::move(rows));
    }
    return out;
}

std::vector<VertexSet> brute_canonical_rows(const std::vector<VertexSet>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexSet> best;
    do {
        std::vector<VertexSet> image(static_cast<std::size_t>(n), 0);
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if ((rows[x] >> y) & 1U) image[perm[x]] |= bit(perm[y]);
        if (best.empty() || image < best) best = image;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Count ordered_set_partitions(int n) {
    if (n < 0 || n > 7) throw Error(Errc::range, "ordered partition oracle limited to 7 points");
    Count total = 0;
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (;;) {
        int k = n == 0 ? 0 : *std::max_element(f.begin(), f.end()) + 1;
        std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
        for (int v : f) hit[v] = true;
        bool onto = true;
        for (int i = 0; i < k; ++i) onto = onto && hit[i];
        if (onto) ++total;
        int i = 0;
        while (i < n && ++f[i] == n) f[i++] = 0;
        if (i == n) break;
    }
    return total;
}

Count compositions(int n) {
    if (n == 0) return 1;
    Count total = 0;
    for (int first = 1; first <= n; ++first) total += compositions(n - first);
    return total;
}

}  // namespace oracle

namespace {

std::string counts_text(std::optional<Count> tau, std::optional<Count> h) {
    auto one = [](std::optional<Count> v) { return v ? std::to_string(*v) : std::string("n/a"); };
    return "tau=" + one(tau) + " h=" + one(h);
}

std::string counts_text(const GraphCounts& c) { return counts_text(c.tau, c.h); }

class Checker {
public:
    Checker(VerifyReport& report, std::ostream* live) : report_(report), live_(live) {}

    // `run` fills expected/actual; the check passes when they are equal.
    void check(const std::string& name, const std::string& expected_label, const std::string& actual_label,
               const std::function<std::pair<std::string, std::string>()>& run) {
        CheckResult c{name, expected_label, "", actual_label, "", false};
        try {
            auto [expected, actual] = run();
            c.expected = expected;
            c.actual = actual;
            c.pass = expected == actual;
        } catch (const std::exception& e) {
            c.actual = std::string("error: ") + e.what();
        }
        if (live_) *live_ << format_check(c) << std::endl;
        report_.checks.push_back(std::move(c));
    }

private:
    VerifyReport& report_;
    std::ostream* live_;
};

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph named(Family f, int size) { return build_named(f, size); }

void formula_suite(Checker& check, const EnumerationOptions& options, CountCache& cache) {
    auto versus = [&](const std::string& name, const Graph& g, const std::function<FormulaResult()>& formula,
                      bool tau_only = false) {
        check.check(name, "formula", "enumeration", [&] {
            FormulaResult f = formula();
            GraphCounts e = enumeration_counts(g, options, &cache);
            if (tau_only || !f.h) return std::pair{counts_text(f.tau, f.h), counts_text(e.tau, f.h ? e.h : f.h)};
            return std::pair{counts_text(f.tau, f.h), counts_text(e)};
        });
    };

    for (int n = 1; n <= 5; ++n)
        versus("complete K" + std::to_string(n), named(Family::complete, n), [n] { return complete_counts(n); });
    for (int n = 3; n <= 8; ++n)
        versus("cycle C" + std::to_string(n), named(Family::cycle, n), [n] { return cycle_counts(n); });
    for (int n = 4; n <= 8; ++n)
        versus("wheel W" + std::to_string(n), named(Family::wheel, n), [n] { return wheel_counts(n); });

    for (int n = 2; n <= 8; ++n) {
        check.check("bipartite connected graphs n=" + std::to_string(n), "formula", "enumeration", [&] {
            std::ostringstream expected, actual;
            int graphs = 0;
            for (const auto& e : graphs_up_to_iso(n, 8).entries) {
                const Graph& g = e.representative;
                if (!is_connected(g) || !bipartition(g)) continue;
                ++graphs;
                FormulaResult f = bipartite_counts(g);
                GraphCounts c = enumeration_counts(g, options, &cache);
                if (FormulaResult{c.tau, c.h, f.theorem} != f) {
                    expected << ' ' << e.code.to_hex() << '=' << counts_text(f.tau, f.h);
                    actual << ' ' << e.code.to_hex() << '=' << counts_text(c);
                }
            }
            return std::pair{std::to_string(graphs) + " graphs agree" + expected.str(),
                             std::to_string(graphs) + " graphs agree" + actual.str()};
        });
    }
    for (int n = 5; n <= 6; ++n) {
        check.check("triangle-free non-bipartite graphs n=" + std::to_string(n), "formula", "enumeration", [&] {
            std::ostringstream expected, actual;
            for (const auto& e : graphs_up_to_iso(n).entries) {
                const Graph& g = e.representative;
                if (!is_connected(g) || has_triangle(g) || bipartition(g)) continue;
                FormulaResult f = bipartite_counts(g);
                expected << ' ' << counts_text(f.tau, f.h);
                actual << ' ' << counts_text(enumeration_counts(g, options, &cache));
            }
            return std::pair{expected.str(), actual.str()};
        });
    }

    Graph k1 = named(Family::complete, 1);
    Graph k2 = named(Family::complete, 2);
    Graph k3 = named(Family::complete, 3);
    Graph c4 = named(Family::cycle, 4);
    Graph p2 = named(Family::path, 2);
    Graph p3 = named(Family::path, 3);
    struct UnionCase {
        std::string name;
        std::vector<UnionPart> parts;
    };
    std::vector<UnionCase> unions = {
        {"2K2", {{k2, 2}}},
        {"K2+N1", {{k2, 1}, {k1, 1}}},
        {"3C4", {{c4, 3}}},
        {"2K3", {{k3, 2}}},
        {"P2+2K2", {{p2, 1}, {k2, 2}}},
        {"C4+K3+2K1", {{c4, 1}, {k3, 1}, {k1, 2}}},
        {"P3+K1", {{p3, 1}, {k1, 1}}},
        {"N4", {{k1, 4}}},
    };
    for (const auto& u : unions) {
        Graph g(0);
        for (const auto& part : u.parts)
            for (int i = 0; i < part.multiplicity; ++i) g = disjoint_union(g, part.graph);
        versus("union " + u.name, g, [&] { return union_counts(u.parts, options, cache); });
        check.check("union " + u.name + " Burnside", "canonical classes", "burnside", [&] {
            auto digraphs = enumerate_transitive_digraphs(g, options);
            return std::pair{std::to_string(digraph_classes(digraphs).count),
                             std::to_string(h_burnside(g, digraphs))};
        });
    }

    struct ProductCase {
        std::string name;
        Graph g, h;
    };
    std::vector<ProductCase> products = {
        {"K2xK2", k2, k2},
        {"K2xC3", k2, k3},
        {"K2xC4", k2, c4},
        {"C3xC3", k3, k3},
        {"K2xP2", k2, p2},
        {"K2xP3", k2, p3},
        {"P2xP2", p2, p2},
        {"K2xK1,3", k2, star(3)},
        {"C4xC4", c4, c4},
    };
    for (const auto& p : products) {
        Graph prod = cartesian_product(p.g, p.h);
        EnumerationOptions wide = options;
        wide.budget_edges = std::max(options.budget_edges, prod.edge_count());
        check.check("product " + p.name, "formula", "enumeration", [&] {
            FormulaResult f = product_counts(p.g, p.h);
            GraphCounts e = enumeration_counts(prod, wide, &cache);
            return std::pair{counts_text(f.tau, f.h), counts_text(e)};
        });
    }

    std::vector<std::pair<std::string, Graph>> blocks = {
        {"K2", k2}, {"K3", k3}, {"C4", c4}, {"K4", named(Family::complete, 4)}};
    for (const auto& [gn, g] : blocks) {
        for (const auto& [hn, h] : blocks) {
            Graph am = amalgamate(g, 0, h, 0);
            versus("amalgam " + gn + "@0*" + hn + "@0", am, [&] { return amalgam_counts(g, 0, h, 0, options); });
        }
    }

    Graph paw = amalgamate(k3, 0, k2, 0);
    Graph bowtie = amalgamate(k3, 0, k3, 0);
    versus("cut vertex P2@1", p2, [&] { return cut_vertex_counts(p2, 1, options); });
    versus("cut vertex paw@0", paw, [&] { return cut_vertex_counts(paw, 0, options); });
    versus("cut vertex bowtie@0", bowtie, [&] { return cut_vertex_counts(bowtie, 0, options); });
    versus("cut vertex P3@1 (tau only)", p3, [&] { return cut_vertex_counts(p3, 1, options); }, true);

    std::vector<std::pair<std::string, Graph>> rooted = {
        {"K2", k2}, {"K3", k3}, {"C4", c4}, {"P2", p2}, {"paw", paw}, {"W5", named(Family::wheel, 5)}, {"K1,3", star(3)}};
    for (const auto& [name, g] : rooted) {
        check.check("sink orbits " + name, "stabiliser burnside", "rooted classes", [&] {
            auto digraphs = enumerate_transitive_digraphs(g, options);
            std::string a, b;
            for (int u = 0; u < g.order(); ++u) {
                a += std::to_string(h_sink(g, u, digraphs)) + " ";
                b += std::to_string(h_sink_classes(g, u, digraphs)) + " ";
            }
            return std::pair{a, b};
        });
    }
}

void oracle_suite(Checker& check, const EnumerationOptions& options) {
    const std::pair<Count, Count> published[] = {{1, 1}, {4, 3}, {29, 9}, {355, 33}};
    for (int n = 1; n <= 4; ++n) {
        check.check("aggregate n=" + std::to_string(n), "published", "aggregate", [&] {
            auto r = aggregate_counts(n, options);
            return std::pair{counts_text(published[n - 1].first, published[n - 1].second), counts_text(r.tau_n, r.h_n)};
        });
    }
    for (int n = 1; n <= 5; ++n) {
        check.check("aggregate n=" + std::to_string(n) + " vs all preorders", "preorder oracle", "aggregate", [&] {
            auto preorders = oracle::all_preorders(n);
            std::set<std::vector<VertexSet>> classes;
            for (const auto& rows : preorders) classes.insert(oracle::brute_canonical_rows(rows));
            auto r = aggregate_counts(n, options);
            return std::pair{counts_text(preorders.size(), classes.size()), counts_text(r.tau_n, r.h_n)};
        });
    }
    for (int n = 1; n <= 6; ++n) {
        check.check("labelled graphs n=" + std::to_string(n), "2^C(n,2)", "sum n!/|Aut|", [&] {
            Count total = 0;
            for (const auto& e : graphs_up_to_iso(n).entries) total += e.labeled_copies(n);
            return std::pair{std::to_string(checked_pow(2, static_cast<unsigned>(n * (n - 1) / 2))),
                             std::to_string(total)};
        });
    }
    for (int n = 1; n <= 5; ++n) {
        check.check("burnside vs classes n=" + std::to_string(n), "canonical classes", "burnside", [&] {
            std::string a, b;
            for (const auto& e : graphs_up_to_iso(n).entries) {
                auto digraphs = enumerate_transitive_digraphs(e.representative, options);
                a += std::to_string(digraph_classes(digraphs).count) + " ";
                b += std::to_string(h_burnside(e.representative, digraphs)) + " ";
            }
            return std::pair{a, b};
        });
    }
    for (int n = 1; n <= 5; ++n) {
        check.check("complete tau n=" + std::to_string(n), "ordered set partitions", "sum S(n,k)k!", [n] {
            return std::pair{std::to_string(oracle::ordered_set_partitions(n)), std::to_string(fubini(n))};
        });
    }
    for (int n = 1; n <= 10; ++n) {
        check.check("complete h n=" + std::to_string(n), "compositions", "2^(n-1)", [n] {
            return std::pair{std::to_string(oracle::compositions(n)), std::to_string(*complete_counts(n).h)};
        });
    }
    for (int n = 1; n <= 3; ++n) {
        check.check("preorder/topology/digraph bijection n=" + std::to_string(n), "preorders", "round trips", [n] {
            auto preorders = oracle::all_preorders(n);
            std::size_t ok = 0;
            for (const auto& rows : preorders) {
                Preorder r(rows);
                Topology t = topology_from_preorder(r);
                bool back = preorder_from_topology(t) == r && digraph_to_preorder(preorder_to_digraph(r)) == r &&
                            topology_from_preorder(preorder_from_topology(t)) == t;
                ok += back ? 1 : 0;
            }
            return std::pair{std::to_string(preorders.size()), std::to_string(ok)};
        });
    }
    check.check("continuity criteria n<=3", "relation preservation", "open preimages", [] {
        std::size_t a = 0, b = 0;
        for (int n = 1; n <= 3; ++n) {
            std::vector<Topology> spaces;
            for (const auto& rows : oracle::all_preorders(n)) spaces.push_back(topology_from_preorder(Preorder(rows)));
            Count maps = checked_pow(static_cast<Count>(n), static_cast<unsigned>(n));
            for (const auto& x : spaces) {
                for (const auto& y : spaces) {
                    for (Count code = 0; code < maps; ++code) {
                        PointMap f{n, std::vector<int>(static_cast<std::size_t>(n))};
                        Count rest = code;
                        for (int i = 0; i < n; ++i, rest /= static_cast<Count>(n)) f.image[i] = static_cast<int>(rest % n);
                        a += preserves_relation(f, preorder_from_topology(x), preorder_from_topology(y)) ? 1 : 0;
                        b += is_continuous(f, x, y) ? 1 : 0;
                    }
                }
            }
        }
        return std::pair{std::to_string(a) + " continuous", std::to_string(b) + " continuous"};
    });
    check.check("duality involution n<=3", "topologies", "involutive", [] {
        std::size_t total = 0, ok = 0;
        for (int n = 1; n <= 3; ++n) {
            for (const auto& rows : oracle::all_preorders(n)) {
                Topology t = topology_from_preorder(Preorder(rows));
                Digraph d = preorder_to_digraph(Preorder(rows));
                ++total;
                bool good = dual_topology(dual_topology(t)) == t && reverse_digraph(reverse_digraph(d)) == d &&
                            dual_topology(t) == topology_from_preorder(digraph_to_preorder(reverse_digraph(d)));
                ok += good ? 1 : 0;
            }
        }
        return std::pair{std::to_string(total), std::to_string(ok)};
    });
    std::vector<std::pair<std::string, Graph>> named_graphs = {
        {"K4", named(Family::complete, 4)}, {"W5", named(Family::wheel, 5)}, {"C4", named(Family::cycle, 4)},
        {"P3", named(Family::path, 3)},     {"W7", named(Family::wheel, 7)}, {"paw", amalgamate(named(Family::complete, 3), 0, named(Family::complete, 2), 0)}};
    for (const auto& [name, g] : named_graphs) {
        check.check("reversal closure " + name, "sinks + digraphs", "sources + reversed", [&] {
            auto digraphs = enumerate_transitive_digraphs(g, options);
            std::set<Digraph> all(digraphs.begin(), digraphs.end());
            std::set<Digraph> reversed;
            for (const auto& d : digraphs) reversed.insert(reverse_digraph(d));
            std::string sinks, sources;
            for (int u = 0; u < g.order(); ++u) {
                sinks += std::to_string(tau_sink(g, u, options)) + " ";
                sources += std::to_string(tau_source(g, u, options)) + " ";
            }
            return std::pair{sinks + std::to_string(all.size()), sources + std::to_string((reversed == all) ? all.size() : 0)};
        });
    }
    for (int n = 1; n <= 5; ++n) {
        check.check("hereditary vanishing n=" + std::to_string(n), "tau(G)=0", "some proper induced tau(H)=0", [&] {
            std::string a, b;
            for (const auto& e : graphs_up_to_iso(n).entries) {
                const Graph& g = e.representative;
                bool zero = tau(g, options) == 0;
                bool sub_zero = false;
                for (VertexSet s = 1; s < g.all_vertices() && !sub_zero; ++s)
                    if (tau(induced_subgraph(g, s), options) == 0) sub_zero = true;
                // A vanishing subgraph forces vanishing; the converse holds with H = G.
                a += zero ? '0' : '+';
                b += (sub_zero || zero) ? '0' : '+';
            }
            return std::pair{a, b};
        });
    }
}

}  // namespace

VerifyReport run_verify(VerifySuite suite, const EnumerationOptions& options, CountCache& cache, std::ostream* live) {
    VerifyReport report;
    Checker check(report, live);
    if (suite != VerifySuite::oracles) formula_suite(check, options, cache);
    if (suite != VerifySuite::formulas) oracle_suite(check, options);
    return report;
}

}  // namespace fintop

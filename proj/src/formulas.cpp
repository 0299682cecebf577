#include "fintop/formulas.hpp"

#include <set>

#include "fintop/error.hpp"
#include "fintop/symmetry.hpp"

namespace fintop {

Count stirling2(int n, int k) {
    if (n < 0 || n > 64 || k < 0 || k > n) {
        throw Error(Errc::range, "S(" + std::to_string(n) + "," + std::to_string(k) + ") needs 0 <= k <= n <= 64");
    }
    // row[j] holds S(m, j) for the current m. Only j >= k - (n - m) can reach
    // S(n, k), and those entries never exceed it, so overflow means S(n, k) overflows.
    std::vector<Count> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (int m = 1; m <= n; ++m) {
        int top = std::min(m, k);
        int bottom = std::max(1, k - (n - m));
        for (int j = top; j >= bottom; --j)
            row[j] = checked_add(checked_mul(static_cast<Count>(j), row[j]), row[j - 1]);
        row[0] = 0;
    }
    return row[k];
}

Count fubini(int n) {
    Count total = 0;
    for (int k = 1; k <= n; ++k) total = checked_add(total, checked_mul(stirling2(n, k), factorial(k)));
    return n == 0 ? 1 : total;
}

FormulaResult complete_counts(int n) {
    if (n < 1) throw Error(Errc::range, "complete graph formula needs n >= 1");
    return {fubini(n), checked_pow(2, static_cast<unsigned>(n - 1)), "complete-graph-surjections"};
}

FormulaResult cycle_counts(int n) {
    if (n < 3) throw Error(Errc::range, "cycle formula needs n >= 3");
    const char* tag = "cycle-corollary";
    if (n == 3) return {13, 4, tag};
    if (n % 2 == 1) return {0, 0, tag};
    return {2, 1, tag};
}

FormulaResult wheel_counts(int n) {
    if (n < 4) throw Error(Errc::range, "wheel formula needs n >= 4");
    const char* tag = "wheel-theorem";
    if (n == 4) return {75, 8, tag};
    if (n == 5) return {8, 4, tag};
    if (n % 2 == 0) return {0, 0, tag};
    return {4, 2, tag};
}

FormulaResult bipartite_counts(const Graph& g) {
    const char* tag = "bipartite-theorem";
    if (!is_connected(g) || g.order() < 2) throw Error(Errc::not_connected, "needs a connected graph on 2+ vertices");
    if (has_triangle(g)) return {std::nullopt, std::nullopt, tag};
    if (!bipartition(g)) return {0, 0, tag};
    if (g.order() == 2) return {3, 2, tag};
    return {2, is_reflexible(g) ? Count{1} : Count{2}, tag};
}

FormulaResult union_counts(const std::vector<UnionPart>& parts, const EnumerationOptions& options, CountCache& cache) {
    std::set<CanonicalCode> codes;
    Count tau_total = 1;
    Count h_total = 1;
    for (const auto& part : parts) {
        if (part.multiplicity < 1) throw Error(Errc::range, "part multiplicity must be positive");
        if (part.graph.order() == 0 || !is_connected(part.graph)) {
            throw Error(Errc::part_not_connected, "union parts must be connected");
        }
        if (!codes.insert(canonical_code(part.graph)).second) {
            throw Error(Errc::parts_not_distinct, "union parts must be pairwise non-isomorphic");
        }
        GraphCounts c = enumeration_counts(part.graph, options, &cache);
        auto m = static_cast<unsigned>(part.multiplicity);
        tau_total = checked_mul(tau_total, checked_pow(c.tau, m));
        h_total = checked_mul(h_total, multiset_coefficient(c.h, m));
    }
    return {tau_total, h_total, "disjoint-union-lemma"};
}

FormulaResult product_counts(const Graph& g, const Graph& h) {
    const char* tag = "cartesian-product-theorem";
    if (g.order() < 2 || h.order() < 2) throw Error(Errc::trivial_factor, "product factors need 2+ vertices");
    if (!is_connected(g) || !is_connected(h)) throw Error(Errc::part_not_connected, "product factors must be connected");
    if (!bipartition(g) || !bipartition(h)) return {0, 0, tag};
    bool reflexible = is_reflexible(g) || is_reflexible(h);
    return {2, reflexible ? Count{1} : Count{2}, tag};
}

namespace {

void check_part(const Graph& g, int anchor) {
    if (anchor < 0 || anchor >= g.order()) throw Error(Errc::vertex_out_of_range, "anchor " + std::to_string(anchor));
    if (g.order() < 2 || !is_connected(g)) {
        throw Error(Errc::part_not_connected, "amalgamation parts must be connected with 2+ vertices");
    }
}

}  // namespace

FormulaResult amalgam_counts(const Graph& g, int u, const Graph& h, int v, const EnumerationOptions& options) {
    check_part(g, u);
    check_part(h, v);
    auto dg = enumerate_transitive_digraphs(g, options);
    auto dh = enumerate_transitive_digraphs(h, options);
    Count sink_g = 0, sink_h = 0;
    for (const auto& d : dg) sink_g += is_sink(d, u) ? 1 : 0;
    for (const auto& d : dh) sink_h += is_sink(d, v) ? 1 : 0;
    FormulaResult r;
    r.theorem = "amalgamation-lemma";
    r.tau = checked_mul(2, checked_mul(sink_g, sink_h));
    if (!cut_vertices(g).empty() || !cut_vertices(h).empty()) return r;
    Count hg = h_sink(g, u, dg);
    if (rooted_isomorphic(g, u, h, v)) {
        r.h = checked_mul(hg + 1, hg);
    } else {
        r.h = checked_mul(2, checked_mul(hg, h_sink(h, v, dh)));
    }
    return r;
}

FormulaResult cut_vertex_counts(const Graph& g, int v, const EnumerationOptions& options) {
    if (!is_cut_vertex(g, v)) throw Error(Errc::not_a_cut_vertex, "vertex " + std::to_string(v));
    auto digraphs = enumerate_transitive_digraphs(g, options);
    Count sinks = 0;
    for (const auto& d : digraphs) sinks += is_sink(d, v) ? 1 : 0;
    FormulaResult r;
    r.theorem = "cut-vertex-lemma";
    r.tau = checked_mul(2, sinks);
    if (cut_vertices(g).size() == 1) r.h = checked_mul(2, h_sink(g, v, digraphs));
    return r;
}

}  // namespace fintop

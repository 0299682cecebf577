#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fintop/arith.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/graph.hpp"

namespace fintop {

/// Closed-form count. An absent value means the theorem's hypotheses do not
/// cover the input, which is different from a count of zero. h is only ever
/// present together with tau.
struct FormulaResult {
    std::optional<Count> tau;
    std::optional<Count> h;
    std::string theorem;

    bool applicable() const { return tau.has_value(); }
    friend bool operator==(const FormulaResult&, const FormulaResult&) = default;
};

/// S(n, k) for 0 <= k <= n <= 64; throws overflow past 64 bits.
Count stirling2(int n, int k);

/// Ordered set partitions of an n-set: sum over k of S(n, k) k!.
Count fubini(int n);

/// tau overflows from n = 19 on.
FormulaResult complete_counts(int n);
FormulaResult cycle_counts(int n);
FormulaResult wheel_counts(int n);

/// Triangle-free connected graphs; not applicable when G has a triangle.
FormulaResult bipartite_counts(const Graph& g);

struct UnionPart {
    Graph graph;
    int multiplicity = 1;
};

/// Disjoint union of pairwise non-isomorphic connected parts. Part counts come
/// from enumeration through `cache`.
FormulaResult union_counts(const std::vector<UnionPart>& parts, const EnumerationOptions& options, CountCache& cache);

/// Cartesian product of two connected graphs with at least two vertices each.
FormulaResult product_counts(const Graph& g, const Graph& h);

/// Amalgamation of connected graphs G and H (two or more vertices each) at u and v.
/// h is absent when either part has a cut vertex.
FormulaResult amalgam_counts(const Graph& g, int u, const Graph& h, int v, const EnumerationOptions& options);

/// v must be a cut vertex of G; h is absent unless v is the only one.
FormulaResult cut_vertex_counts(const Graph& g, int v, const EnumerationOptions& options);

}  // namespace fintop

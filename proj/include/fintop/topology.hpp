#pragma once

#include <string>
#include <vector>

#include "fintop/digraph.hpp"
#include "fintop/error.hpp"
#include "fintop/graph.hpp"

namespace fintop {

/// Largest ground set for which open-set families are materialised.
inline constexpr int kMaxTopologyPoints = 16;
/// Largest ground set accepted by validate_topology for arbitrary families.
inline constexpr int kMaxValidatedPoints = 12;

/// Reflexive transitive relation; row(x) is R(x) = {y : (x, y) in R}.
class Preorder {
public:
    /// Throws relation_not_preorder unless the rows are reflexive and transitive.
    explicit Preorder(std::vector<VertexSet> rows);

    static Preorder discrete(int n);
    static Preorder indiscrete(int n);

    int size() const { return static_cast<int>(rows_.size()); }
    VertexSet row(int x) const { return rows_[x]; }
    bool related(int x, int y) const { return (rows_[x] >> y) & 1U; }
    const std::vector<VertexSet>& rows() const { return rows_; }

    friend bool operator==(const Preorder&, const Preorder&) = default;
    friend auto operator<=>(const Preorder&, const Preorder&) = default;

private:
    std::vector<VertexSet> rows_;
};

/// Family of open sets on {0..n-1}, kept sorted ascending by bitmask.
class Topology {
public:
    int size() const { return n_; }
    const std::vector<VertexSet>& opens() const { return opens_; }
    bool is_open(VertexSet s) const;

    friend bool operator==(const Topology&, const Topology&) = default;

private:
    friend Topology validate_topology(std::vector<VertexSet> family, int n);
    friend Topology topology_from_preorder(const Preorder& r);
    friend Topology dual_topology(const Topology& t);
    Topology(int n, std::vector<VertexSet> opens) : n_(n), opens_(std::move(opens)) {}

    int n_ = 0;
    std::vector<VertexSet> opens_;
};

/// Error raised by validate_topology; names the offending pair when one exists.
class TopologyError : public Error {
public:
    TopologyError(Errc code, const std::string& message, VertexSet a = 0, VertexSet b = 0)
        : Error(code, message), a_(a), b_(b) {}
    VertexSet first() const { return a_; }
    VertexSet second() const { return b_; }

private:
    VertexSet a_;
    VertexSet b_;
};

/// Accepts the family iff it contains the empty and full sets and is closed
/// under pairwise union and intersection; duplicates are merged.
Topology validate_topology(std::vector<VertexSet> family, int n);

/// {U : R(x) is a subset of U for every x in U}.
Topology topology_from_preorder(const Preorder& r);

/// (x, y) related iff every open set containing x also contains y.
Preorder preorder_from_topology(const Topology& t);

Digraph preorder_to_digraph(const Preorder& r);
/// Throws digraph_not_transitive when the digraph does not come from a preorder.
Preorder digraph_to_preorder(const Digraph& d);

Graph underlying_graph(const Digraph& d);
Graph underlying_graph(const Preorder& r);
Graph underlying_graph(const Topology& t);

/// Distinct sets R(x), sorted ascending.
std::vector<VertexSet> minimal_basis(const Preorder& r);

/// Total map from one ground set to another.
struct PointMap {
    int target_size = 0;
    std::vector<int> image;
};

/// Open-preimage continuity. The relation-preservation criterion is evaluated
/// alongside; disagreement throws internal_error.
bool is_continuous(const PointMap& f, const Topology& from, const Topology& to);
bool preserves_relation(const PointMap& f, const Preorder& from, const Preorder& to);

bool are_homeomorphic(const Topology& a, const Topology& b);

/// Components of the space, counted through the underlying graph.
int component_count(const Topology& t);

/// Opens of the dual are the closed sets of t.
Topology dual_topology(const Topology& t);

}  // namespace fintop

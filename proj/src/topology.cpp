#include "fintop/topology.hpp"

#include <algorithm>

#include "fintop/symmetry.hpp"

namespace fintop {

namespace {

std::string set_text(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (int v : members(s)) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

}  // namespace

Preorder::Preorder(std::vector<VertexSet> rows) : rows_(std::move(rows)) {
    int n = size();
    if (n > kMaxVertices) throw Error(Errc::size_bound_exceeded, "preorder size");
    for (int x = 0; x < n; ++x) {
        if (rows_[x] & ~low_bits(n)) throw Error(Errc::vertex_out_of_range, "relation pair out of range");
        if (!(rows_[x] & bit(x)))
            throw Error(Errc::relation_not_preorder, "not reflexive at " + std::to_string(x));
    }
    for (int x = 0; x < n; ++x) {
        for (int y : members(rows_[x])) {
            if (rows_[y] & ~rows_[x]) {
                throw Error(Errc::relation_not_preorder,
                            "not transitive: (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
}

Preorder Preorder::discrete(int n) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) rows[x] = bit(x);
    return Preorder(std::move(rows));
}

Preorder Preorder::indiscrete(int n) {
    return Preorder(std::vector<VertexSet>(static_cast<std::size_t>(n), low_bits(n)));
}

bool Topology::is_open(VertexSet s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

Topology validate_topology(std::vector<VertexSet> family, int n) {
    if (n < 0 || n > kMaxValidatedPoints) {
        throw Error(Errc::size_bound_exceeded, "validation limited to " + std::to_string(kMaxValidatedPoints) +
                                                   " points");
    }
    VertexSet full = low_bits(n);
    for (VertexSet s : family)
        if (s & ~full) throw Error(Errc::vertex_out_of_range, "subset " + set_text(s) + " outside ground set");
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    auto has = [&](VertexSet s) { return std::binary_search(family.begin(), family.end(), s); };
    if (!has(0)) throw TopologyError(Errc::missing_empty, "empty set is not open");
    if (!has(full)) throw TopologyError(Errc::missing_full, "ground set is not open");
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            VertexSet a = family[i], b = family[j];
            if (!has(a | b)) {
                throw TopologyError(Errc::not_closed_under_union,
                                    set_text(a) + " union " + set_text(b) + " is not open", a, b);
            }
            if (!has(a & b)) {
                throw TopologyError(Errc::not_closed_under_intersection,
                                    set_text(a) + " intersect " + set_text(b) + " is not open", a, b);
            }
        }
    }
    return Topology(n, std::move(family));
}

Topology topology_from_preorder(const Preorder& r) {
    int n = r.size();
    if (n > kMaxTopologyPoints) {
        throw Error(Errc::size_bound_exceeded, "open-set families limited to " +
                                                   std::to_string(kMaxTopologyPoints) + " points");
    }
    std::vector<VertexSet> opens;
    VertexSet full = low_bits(n);
    for (VertexSet u = 0;; ++u) {
        bool open = true;
        for (VertexSet rest = u; rest && open; rest &= rest - 1) {
            if (r.row(std::countr_zero(rest)) & ~u) open = false;
        }
        if (open) opens.push_back(u);
        if (u == full) break;
    }
    return Topology(n, std::move(opens));
}

Preorder preorder_from_topology(const Topology& t) {
    int n = t.size();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n), low_bits(n));
    for (VertexSet open : t.opens())
        for (int x : members(open)) rows[x] &= open;
    return Preorder(std::move(rows));
}

Digraph preorder_to_digraph(const Preorder& r) {
    std::vector<VertexSet> out(static_cast<std::size_t>(r.size()));
    for (int x = 0; x < r.size(); ++x) out[x] = r.row(x) & ~bit(x);
    return Digraph(std::move(out));
}

Preorder digraph_to_preorder(const Digraph& d) {
    if (!is_transitive(d)) throw Error(Errc::digraph_not_transitive, "arc set is not transitive");
    std::vector<VertexSet> rows(static_cast<std::size_t>(d.order()));
    for (int x = 0; x < d.order(); ++x) rows[x] = d.out(x) | bit(x);
    return Preorder(std::move(rows));
}

Graph underlying_graph(const Digraph& d) {
    Graph g(d.order());
    for (auto [u, v] : d.arcs())
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph underlying_graph(const Preorder& r) { return underlying_graph(preorder_to_digraph(r)); }

Graph underlying_graph(const Topology& t) { return underlying_graph(preorder_from_topology(t)); }

std::vector<VertexSet> minimal_basis(const Preorder& r) {
    std::vector<VertexSet> basis(r.rows());
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    return basis;
}

namespace {

void check_map(const PointMap& f, int from_size, int to_size) {
    if (static_cast<int>(f.image.size()) != from_size || f.target_size != to_size) {
        throw Error(Errc::ground_set_mismatch, "point map does not match the ground sets");
    }
    for (int y : f.image)
        if (y < 0 || y >= to_size) throw Error(Errc::ground_set_mismatch, "point map leaves the target");
}

}  // namespace

bool preserves_relation(const PointMap& f, const Preorder& from, const Preorder& to) {
    check_map(f, from.size(), to.size());
    for (int x = 0; x < from.size(); ++x)
        for (int y : members(from.row(x)))
            if (!to.related(f.image[x], f.image[y])) return false;
    return true;
}

bool is_continuous(const PointMap& f, const Topology& from, const Topology& to) {
    check_map(f, from.size(), to.size());
    bool by_opens = true;
    for (VertexSet v : to.opens()) {
        VertexSet preimage = 0;
        for (int x = 0; x < from.size(); ++x)
            if (v & bit(f.image[x])) preimage |= bit(x);
        if (!from.is_open(preimage)) {
            by_opens = false;
            break;
        }
    }
    bool by_relation = preserves_relation(f, preorder_from_topology(from), preorder_from_topology(to));
    if (by_opens != by_relation) {
        throw Error(Errc::internal_error, "open-preimage and relation-preservation continuity disagree");
    }
    return by_opens;
}

bool are_homeomorphic(const Topology& a, const Topology& b) {
    if (a.size() != b.size() || a.opens().size() != b.opens().size()) return false;
    return canonical_code_digraph(preorder_to_digraph(preorder_from_topology(a))) ==
           canonical_code_digraph(preorder_to_digraph(preorder_from_topology(b)));
}

int component_count(const Topology& t) { return static_cast<int>(components(underlying_graph(t)).size()); }

Topology dual_topology(const Topology& t) {
    VertexSet full = low_bits(t.size());
    std::vector<VertexSet> closed;
    closed.reserve(t.opens().size());
    for (VertexSet open : t.opens()) closed.push_back(full & ~open);
    std::sort(closed.begin(), closed.end());
    return Topology(t.size(), std::move(closed));
}

}  // namespace fintop

#pragma once

#include <utility>
#include <vector>

#include "fintop/graph.hpp"

namespace fintop {

/// Loop-free directed graph; out(v) holds the heads of arcs leaving v.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : out_(static_cast<std::size_t>(n), 0) {}
    explicit Digraph(std::vector<VertexSet> out_rows);

    int order() const { return static_cast<int>(out_.size()); }
    VertexSet out(int v) const { return out_[v]; }
    VertexSet in(int v) const;
    bool has_arc(int u, int v) const { return (out_[u] >> v) & 1U; }
    int arc_count() const;
    const std::vector<VertexSet>& rows() const { return out_; }

    void add_arc(int u, int v);

    /// Arcs (u, v) in lexicographic order.
    std::vector<std::pair<int, int>> arcs() const;

    friend bool operator==(const Digraph&, const Digraph&) = default;
    friend auto operator<=>(const Digraph&, const Digraph&) = default;

private:
    std::vector<VertexSet> out_;
};

/// a->b and b->c force a->c for distinct a, c.
bool is_transitive(const Digraph& d);

Digraph reverse_digraph(const Digraph& d);

}  // namespace fintop

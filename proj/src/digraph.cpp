#include "fintop/digraph.hpp"

#include "fintop/error.hpp"

namespace fintop {

Digraph::Digraph(std::vector<VertexSet> out_rows) : out_(std::move(out_rows)) {
    if (order() > kMaxVertices) throw Error(Errc::size_bound_exceeded, "digraph order");
    for (int v = 0; v < order(); ++v) {
        if (out_[v] & bit(v)) throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(v));
        if (out_[v] & ~low_bits(order())) throw Error(Errc::vertex_out_of_range, "arc head out of range");
    }
}

VertexSet Digraph::in(int v) const {
    VertexSet s = 0;
    for (int u = 0; u < order(); ++u)
        if (has_arc(u, v)) s |= bit(u);
    return s;
}

int Digraph::arc_count() const {
    int count = 0;
    for (VertexSet row : out_) count += popcount(row);
    return count;
}

void Digraph::add_arc(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order())
        throw Error(Errc::vertex_out_of_range, "arc " + std::to_string(u) + "->" + std::to_string(v));
    if (u == v) throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(u));
    out_[u] |= bit(v);
}

std::vector<std::pair<int, int>> Digraph::arcs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u)
        for (int v : members(out_[u])) out.emplace_back(u, v);
    return out;
}

bool is_transitive(const Digraph& d) {
    for (int a = 0; a < d.order(); ++a) {
        VertexSet two_step = 0;
        for (int b : members(d.out(a))) two_step |= d.out(b);
        two_step &= ~bit(a);
        if (two_step & ~d.out(a)) return false;
    }
    return true;
}

Digraph reverse_digraph(const Digraph& d) {
    Digraph r(d.order());
    for (auto [u, v] : d.arcs()) r.add_arc(v, u);
    return r;
}

}  // namespace fintop

#include "fintop/graph.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "fintop/error.hpp"

namespace fintop {

std::vector<int> members(VertexSet s) {
    std::vector<int> out;
    out.reserve(popcount(s));
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) {
        throw Error(Errc::size_bound_exceeded, "graph order " + std::to_string(n) + " outside 0.." +
                                                   std::to_string(kMaxVertices));
    }
    adj_.assign(static_cast<std::size_t>(n), 0);
}

int Graph::edge_count() const {
    int twice = 0;
    for (VertexSet row : adj_) twice += popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < order(); ++u) {
        for (int v : members(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
    }
    return out;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= order() || v >= order()) {
        throw Error(Errc::vertex_out_of_range, "edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (u == v) throw Error(Errc::invalid_graph, "loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

char family_letter(Family f) {
    switch (f) {
        case Family::complete: return 'K';
        case Family::cycle: return 'C';
        case Family::wheel: return 'W';
        case Family::path: return 'P';
        case Family::null: return 'N';
    }
    return '?';
}

std::optional<Family> family_from_letter(char c) {
    switch (c) {
        case 'K': return Family::complete;
        case 'C': return Family::cycle;
        case 'W': return Family::wheel;
        case 'P': return Family::path;
        case 'N': return Family::null;
        default: return std::nullopt;
    }
}

Graph build_named(Family family, int size) {
    int minimum = family == Family::cycle ? 3 : family == Family::wheel ? 4 : 1;
    if (size < minimum) {
        throw Error(Errc::invalid_family_size, std::string(1, family_letter(family)) + std::to_string(size) +
                                                   " needs size >= " + std::to_string(minimum));
    }
    switch (family) {
        case Family::complete: {
            Graph g(size);
            for (int u = 0; u < size; ++u)
                for (int v = u + 1; v < size; ++v) g.add_edge(u, v);
            return g;
        }
        case Family::cycle: {
            Graph g(size);
            for (int u = 0; u < size; ++u) g.add_edge(u, (u + 1) % size);
            return g;
        }
        case Family::wheel: {
            Graph g(size);
            int rim = size - 1;
            for (int i = 0; i < rim; ++i) {
                g.add_edge(0, 1 + i);
                g.add_edge(1 + i, 1 + (i + 1) % rim);
            }
            return g;
        }
        case Family::path: {
            Graph g(size + 1);
            for (int u = 0; u < size; ++u) g.add_edge(u, u + 1);
            return g;
        }
        case Family::null: return Graph(size);
    }
    throw Error(Errc::internal_error, "unknown family");
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int ng = g.order();
    Graph out(ng + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    int ng = g.order();
    int nh = h.order();
    if (ng * nh > kMaxVertices) {
        throw Error(Errc::size_bound_exceeded, "product has " + std::to_string(ng * nh) + " vertices");
    }
    Graph out(ng * nh);
    for (int u = 0; u < ng; ++u) {
        for (auto [a, b] : h.edges()) out.add_edge(u * nh + a, u * nh + b);
    }
    for (auto [a, b] : g.edges()) {
        for (int v = 0; v < nh; ++v) out.add_edge(a * nh + v, b * nh + v);
    }
    return out;
}

int amalgam_index_of_h(int n_g, int v, int w) {
    if (w == v) return -1;
    return n_g + (w < v ? w : w - 1);
}

Graph amalgamate(const Graph& g, int u, const Graph& h, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order()) {
        throw Error(Errc::vertex_out_of_range,
                    "amalgamation anchors " + std::to_string(u) + ", " + std::to_string(v));
    }
    int ng = g.order();
    Graph out(ng + h.order() - 1);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    auto index = [&](int w) { return w == v ? u : amalgam_index_of_h(ng, v, w); };
    for (auto [a, b] : h.edges()) out.add_edge(index(a), index(b));
    return out;
}

namespace {

VertexSet reach(const Graph& g, int start, VertexSet allowed) {
    VertexSet seen = bit(start);
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        for (int v : members(frontier)) next |= g.neighbors(v);
        next &= allowed & ~seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

int count_components(const Graph& g, VertexSet allowed) {
    int count = 0;
    while (allowed) {
        allowed &= ~reach(g, std::countr_zero(allowed), allowed);
        ++count;
    }
    return count;
}

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) {
        throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(v) + " of " +
                                                   std::to_string(g.order()));
    }
}

}  // namespace

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.all_vertices();
    while (left) {
        VertexSet c = reach(g, std::countr_zero(left), left);
        out.push_back(c);
        left &= ~c;
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_cut_vertex(const Graph& g, int v) {
    check_vertex(g, v);
    VertexSet all = g.all_vertices();
    return count_components(g, all & ~bit(v)) > count_components(g, all);
}

std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (is_cut_vertex(g, v)) out.push_back(v);
    return out;
}

bool has_triangle(const Graph& g) {
    for (auto [u, v] : g.edges())
        if (g.neighbors(u) & g.neighbors(v)) return true;
    return false;
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
    if (s & ~g.all_vertices()) throw Error(Errc::vertex_out_of_range, "subset outside vertex range");
    std::vector<int> keep = members(s);
    Graph out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.has_edge(keep[i], keep[j])) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

std::optional<Bipartition> bipartition(const Graph& g) {
    Bipartition parts;
    for (VertexSet comp : components(g)) {
        // Breadth-first layers alternate sides, starting from the smallest index.
        VertexSet side[2] = {0, 0};
        VertexSet frontier = bit(std::countr_zero(comp));
        VertexSet seen = frontier;
        int layer = 0;
        while (frontier) {
            side[layer & 1] |= frontier;
            VertexSet next = 0;
            for (int v : members(frontier)) next |= g.neighbors(v);
            next &= ~seen;
            seen |= next;
            frontier = next;
            ++layer;
        }
        for (int s = 0; s < 2; ++s)
            for (int v : members(side[s]))
                if (g.neighbors(v) & side[s]) return std::nullopt;
        parts.first |= side[0];
        parts.second |= side[1];
    }
    return parts;
}

Graph read_edge_list(std::istream& in) {
    std::optional<Graph> g;
    std::string line;
    int line_no = 0;
    auto fail = [&](const std::string& why) {
        throw Error(Errc::invalid_graph, "line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string tag;
        if (!(fields >> tag)) continue;
        if (tag == "n") {
            int n = -1;
            if (g) fail("duplicate vertex-count line");
            if (!(fields >> n) || n < 0) fail("expected `n <count>`");
            if (n > kMaxVertices) fail("more than " + std::to_string(kMaxVertices) + " vertices");
            g.emplace(n);
        } else if (tag == "e") {
            int u = -1, v = -1;
            if (!g) fail("edge before `n` line");
            if (!(fields >> u >> v)) fail("expected `e <u> <v>`");
            if (u < 0 || v < 0 || u >= g->order() || v >= g->order())
                throw Error(Errc::vertex_out_of_range, "line " + std::to_string(line_no) + ": vertex out of range");
            if (u == v) fail("loop edge");
            if (g->has_edge(u, v)) fail("duplicate edge");
            g->add_edge(u, v);
        } else {
            fail("unknown record `" + tag + "`");
        }
        std::string extra;
        if (fields >> extra) fail("trailing text `" + extra + "`");
    }
    if (!g) throw Error(Errc::invalid_graph, "missing `n <count>` line");
    return *g;
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "n " << g.order() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

}  // namespace fintop

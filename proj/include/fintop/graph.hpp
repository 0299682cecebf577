#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fintop {

/// Subset of {0..63}; bit v set iff vertex v is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
constexpr VertexSet low_bits(int n) { return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }

std::vector<int> members(VertexSet s);

/// Finite simple undirected graph on vertices 0..n-1, stored as adjacency rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj_[v]); }
    int edge_count() const;
    VertexSet all_vertices() const { return low_bits(order()); }

    /// Edges {u,v} with u < v in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Throws invalid_graph on loops and vertex_out_of_range on bad indices.
    void add_edge(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<VertexSet> adj_;
};

enum class Family { complete, cycle, wheel, path, null };

char family_letter(Family f);
std::optional<Family> family_from_letter(char c);

/// Named graphs. Cycles run 0-1-..-(n-1)-0; the wheel W_n has hub 0 and rim
/// 1..n-1 in circular order; P_l is the path of length l on l+1 vertices.
Graph build_named(Family family, int size);

Graph disjoint_union(const Graph& g, const Graph& h);

/// Vertex (u, v) of G x H is encoded as u * |H| + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Glues vertex u of G to vertex v of H. The glued vertex keeps G's index u;
/// H's remaining vertices follow G's in their original order.
Graph amalgamate(const Graph& g, int u, const Graph& h, int v);

/// Index of H's vertex w inside amalgamate(g, u, h, v).
int amalgam_index_of_h(int n_g, int v, int w);

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_cut_vertex(const Graph& g, int v);
std::vector<int> cut_vertices(const Graph& g);
bool has_triangle(const Graph& g);

/// Relabels S order-preservingly to 0..|S|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);

struct Bipartition {
    VertexSet first = 0;
    VertexSet second = 0;
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Proper 2-colouring; in every component the part holding the smallest
/// vertex index goes to `first`. Empty when G has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// Edge-list text: `n <count>`, then `e <u> <v>` lines; `#` starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace fintop

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "fintop/arith.hpp"
#include "fintop/digraph.hpp"
#include "fintop/graph.hpp"

namespace fintop {

/// Largest vertex count accepted by the automorphism and canonical-form searches.
inline constexpr int kMaxSymmetryVertices = 16;

/// Largest group that automorphism_group() will materialise.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 19;

class Permutation {
public:
    Permutation() = default;
    /// Throws range unless `image` is a bijection of 0..n-1.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[v]; }
    const std::vector<int>& image() const { return image_; }
    bool is_identity() const;

    VertexSet apply(VertexSet s) const;

    /// (p * q)(v) = p(q(v)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);
    Permutation inverse() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

/// sigma(D) has arc sigma(a)->sigma(b) for every arc a->b of D.
Digraph permute(const Digraph& d, const Permutation& p);
Graph permute(const Graph& g, const Permutation& p);

/// True iff sigma(D) == D, without building sigma(D).
bool is_fixed_by(const Digraph& d, const Permutation& p);

/// The full automorphism group of a graph, sorted with the identity first.
class AutGroup {
public:
    explicit AutGroup(std::vector<Permutation> elements);

    std::size_t order() const { return elements_.size(); }
    std::span<const Permutation> elements() const { return elements_; }
    /// Elements fixing vertex v.
    std::vector<Permutation> stabilizer(int v) const;

private:
    std::vector<Permutation> elements_;
};

/// Conjugacy classes of a permutation group (given as its full element list),
/// as index lists into `group`. Throws internal_error if the list is not closed.
std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const Permutation> group);

/// Visits every automorphism of G that maps each vertex v into `allowed[v]`
/// (all vertices when `allowed` is empty). The visitor returns false to stop.
void for_each_automorphism(const Graph& g, std::span<const VertexSet> allowed,
                           const std::function<bool(const Permutation&)>& visit);

AutGroup automorphism_group(const Graph& g);
Count automorphism_count(const Graph& g);

/// True iff some automorphism exchanges the two parts of a connected bipartite graph.
bool is_reflexible(const Graph& g);

/// Lexicographically least adjacency encoding over the labellings reachable by
/// individualisation and refinement; equal for two inputs iff they are isomorphic
/// (respecting vertex colours when colours are supplied).
struct CanonicalCode {
    int n = 0;
    std::vector<int> colors;
    std::vector<VertexSet> rows;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

    std::string to_hex() const;
};

CanonicalCode canonical_code(const Graph& g);
CanonicalCode canonical_code(const Graph& g, std::span<const int> colors);
CanonicalCode canonical_code_digraph(const Digraph& d);
CanonicalCode canonical_code_digraph(const Digraph& d, std::span<const int> colors);

/// The graph whose adjacency rows are the code's rows.
Graph graph_from_code(const CanonicalCode& code);

/// Labelling realising the canonical code: vertex label[i] of G lands at position i.
std::vector<int> canonical_labeling(const Graph& g);

/// Is there an isomorphism G -> H carrying u to v?
bool rooted_isomorphic(const Graph& g, int u, const Graph& h, int v);

}  // namespace fintop

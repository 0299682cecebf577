#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fintop/arith.hpp"
#include "fintop/digraph.hpp"
#include "fintop/graph.hpp"
#include "fintop/symmetry.hpp"

namespace fintop {

struct EnumerationOptions {
    /// Graphs with more edges are refused with budget_exceeded.
    int budget_edges = 24;
    /// Search partitions run on this many threads; results never depend on it.
    unsigned workers = 1;
};

/// Orientation of an edge {u, v} with u < v.
enum class EdgeState : std::uint8_t { forward, backward, both };

/// Order in which the search decides edges: each step prefers an edge touching
/// an already-decided vertex, then the larger minimum endpoint degree, then the
/// lexicographically smaller pair.
std::vector<std::pair<int, int>> search_edge_order(const Graph& g);

/// Streams every transitive digraph whose underlying graph is exactly G, once
/// each, in lexicographic order of edge states along search_edge_order(G).
void for_each_transitive_digraph(const Graph& g, const EnumerationOptions& options,
                                 const std::function<void(const Digraph&)>& visit);

std::vector<Digraph> enumerate_transitive_digraphs(const Graph& g, const EnumerationOptions& options = {});

Count tau(const Graph& g, const EnumerationOptions& options = {});

/// Throws not_an_automorphism unless sigma is in Aut(G).
Count fix_count(const Graph& g, const Permutation& sigma, const EnumerationOptions& options = {});
Count fix_count(std::span<const Digraph> digraphs, const Permutation& sigma);

/// Orbit count by averaging fixed points over Aut(G).
Count h_burnside(const Graph& g, const EnumerationOptions& options = {});
/// `digraphs` must be closed under Aut(G), as a full enumeration is.
Count h_burnside(const Graph& g, std::span<const Digraph> digraphs);

struct ClassListing {
    Count count = 0;
    /// First member of each class in stream order, listed in that order.
    std::vector<Digraph> representatives;
};

/// Orbit count by distinct digraph canonical codes.
Count h_classes(const Graph& g, const EnumerationOptions& options = {});
ClassListing digraph_classes(std::span<const Digraph> digraphs);

bool is_sink(const Digraph& d, int v);
bool is_source(const Digraph& d, int v);

Count tau_sink(const Graph& g, int u, const EnumerationOptions& options = {});
Count tau_source(const Graph& g, int u, const EnumerationOptions& options = {});

/// Orbits of the digraphs with u a sink under the automorphisms of G that fix u.
Count h_sink(const Graph& g, int u, const EnumerationOptions& options = {});
Count h_sink(const Graph& g, int u, std::span<const Digraph> digraphs);
/// Same quantity via canonical codes with u singled out by colour.
Count h_sink_classes(const Graph& g, int u, std::span<const Digraph> digraphs);

struct GraphCounts {
    Count tau = 0;
    Count h = 0;
    friend bool operator==(const GraphCounts&, const GraphCounts&) = default;
};

/// Memo of enumeration results keyed by graph canonical code. Inserts are
/// idempotent, so concurrent recomputation is harmless.
class CountCache {
public:
    std::optional<GraphCounts> find(const CanonicalCode& code) const;
    void insert(const CanonicalCode& code, GraphCounts counts);
    /// Replaces an entry unconditionally; used to plant faults in tests.
    void overwrite(const CanonicalCode& code, GraphCounts counts);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    std::map<CanonicalCode, GraphCounts> entries_;
};

/// tau by enumeration and h by canonical classes, consulting `cache` when given.
GraphCounts enumeration_counts(const Graph& g, const EnumerationOptions& options, CountCache* cache = nullptr);

enum class CountMethod { enumeration, burnside, formula };

std::string method_name(CountMethod m);

struct CountReport {
    CanonicalCode graph;
    Count tau = 0;
    Count h = 0;
    CountMethod method = CountMethod::enumeration;
    std::chrono::nanoseconds elapsed{0};
};

/// Enumeration-based report; h comes from canonical classes or Burnside.
CountReport count_graph(const Graph& g, CountMethod method, const EnumerationOptions& options);

}  // namespace fintop

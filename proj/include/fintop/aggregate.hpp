#pragma once

#include <chrono>
#include <vector>

#include "fintop/arith.hpp"
#include "fintop/enumerate.hpp"
#include "fintop/graph.hpp"
#include "fintop/symmetry.hpp"

namespace fintop {

/// Default ceiling for graphs_up_to_iso.
inline constexpr int kDefaultIsoBound = 7;
/// Largest n aggregated without the explicit large-run flag.
inline constexpr int kDefaultAggregateBound = 6;
inline constexpr int kMaxAggregate = 7;

struct IsoClassEntry {
    Graph representative;
    CanonicalCode code;
    Count aut_order = 0;
    Count tau = 0;
    Count h = 0;
    /// h recomputed by Burnside; aggregate_counts requires it to match h.
    Count h_burnside = 0;
    std::chrono::nanoseconds elapsed{0};

    Count labeled_copies(int n) const { return factorial(static_cast<unsigned>(n)) / aut_order; }
};

struct IsoClassTable {
    int n = 0;
    /// Sorted by canonical code; each representative is its own canonical form.
    std::vector<IsoClassEntry> entries;
};

/// One representative per isomorphism class of n-vertex graphs, with aut_order
/// filled and counts left at zero. Built by extending every (n-1)-vertex class
/// with a new vertex in all possible ways and de-duplicating by canonical code.
IsoClassTable graphs_up_to_iso(int n, int bound = kDefaultIsoBound);

struct AggregateResult {
    Count tau_n = 0;
    Count h_n = 0;
    IsoClassTable table;
};

/// Sums tau(G) n!/|Aut G| and h(G) over the classes. Classes run in parallel on
/// options.workers threads; n = 7 needs allow_large.
AggregateResult aggregate_counts(int n, const EnumerationOptions& options, bool allow_large = false);

}  // namespace fintop

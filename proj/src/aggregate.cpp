#include "fintop/aggregate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "fintop/error.hpp"
#include "fintop/formulas.hpp"

namespace fintop {

IsoClassTable graphs_up_to_iso(int n, int bound) {
    if (n < 0 || n > bound) {
        throw Error(Errc::size_bound_exceeded, "graph classes are generated up to n = " + std::to_string(bound));
    }
    std::vector<Graph> level{Graph(0)};
    for (int m = 1; m <= n; ++m) {
        std::map<CanonicalCode, Graph> next;
        for (const Graph& base : level) {
            for (VertexSet nbrs = 0; nbrs <= low_bits(m - 1); ++nbrs) {
                Graph g(m);
                for (auto [a, b] : base.edges()) g.add_edge(a, b);
                for (int v : members(nbrs)) g.add_edge(v, m - 1);
                CanonicalCode code = canonical_code(g);
                if (!next.contains(code)) next.emplace(code, graph_from_code(code));
            }
        }
        level.clear();
        for (auto& [code, g] : next) level.push_back(std::move(g));
    }
    IsoClassTable table;
    table.n = n;
    for (Graph& g : level) {
        IsoClassEntry e;
        e.code = canonical_code(g);
        e.representative = std::move(g);
        e.aut_order = automorphism_count(e.representative);
        table.entries.push_back(std::move(e));
    }
    return table;
}

namespace {

// Closed forms that apply to a class, used as extra consistency checks.
std::optional<FormulaResult> formula_for(const Graph& g) {
    int n = g.order();
    if (n >= 1 && g.edge_count() == n * (n - 1) / 2) return complete_counts(n);
    if (n >= 2 && is_connected(g)) {
        FormulaResult r = bipartite_counts(g);
        if (r.applicable()) return r;
    }
    return std::nullopt;
}

void fill_entry(IsoClassEntry& e, const EnumerationOptions& options) {
    auto start = std::chrono::steady_clock::now();
    EnumerationOptions inner = options;
    inner.workers = 1;
    auto digraphs = enumerate_transitive_digraphs(e.representative, inner);
    e.tau = digraphs.size();
    e.h = digraph_classes(digraphs).count;
    e.h_burnside = h_burnside(e.representative, digraphs);
    if (e.h != e.h_burnside) {
        throw Error(Errc::internal_error, "class " + e.code.to_hex() + ": canonical classes " + std::to_string(e.h) +
                                              " != Burnside " + std::to_string(e.h_burnside));
    }
    if (auto f = formula_for(e.representative)) {
        if (f->tau != e.tau || f->h != e.h) {
            throw Error(Errc::internal_error, "class " + e.code.to_hex() + " disagrees with " + f->theorem);
        }
    }
    e.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
}

}  // namespace

AggregateResult aggregate_counts(int n, const EnumerationOptions& options, bool allow_large) {
    if (n < 1) throw Error(Errc::range, "aggregate needs n >= 1");
    int limit = allow_large ? kMaxAggregate : kDefaultAggregateBound;
    if (n > limit) {
        throw Error(Errc::size_bound_exceeded,
                    "aggregate is limited to n = " + std::to_string(limit) +
                        (allow_large ? "" : "; pass --allow-large for n = " + std::to_string(kMaxAggregate)));
    }
    AggregateResult result;
    result.table = graphs_up_to_iso(n, kMaxAggregate);
    auto& entries = result.table.entries;

    std::vector<std::exception_ptr> errors(entries.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) {
            try {
                fill_entry(entries[i], options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(entries.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    Count labeled = 0;
    for (const auto& e : entries) {
        labeled = checked_add(labeled, e.labeled_copies(n));
        result.tau_n = checked_add(result.tau_n, checked_mul(e.labeled_copies(n), e.tau));
        result.h_n = checked_add(result.h_n, e.h);
    }
    if (labeled != checked_pow(2, static_cast<unsigned>(n * (n - 1) / 2))) {
        throw Error(Errc::internal_error, "class table does not cover every labelled graph");
    }
    return result;
}

}  // namespace fintop

#include "fintop/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <set>
#include <thread>

#include "fintop/error.hpp"

namespace fintop {

std::vector<std::pair<int, int>> search_edge_order(const Graph& g) {
    std::vector<std::pair<int, int>> left = g.edges();
    std::vector<std::pair<int, int>> order;
    order.reserve(left.size());
    VertexSet touched = 0;
    while (!left.empty()) {
        auto key = [&](const std::pair<int, int>& e) {
            bool adjacent = (touched & (bit(e.first) | bit(e.second))) != 0;
            int weight = std::min(g.degree(e.first), g.degree(e.second));
            return std::make_tuple(adjacent ? 0 : 1, -weight, e.first, e.second);
        };
        auto best = std::min_element(left.begin(), left.end(),
                                     [&](const auto& a, const auto& b) { return key(a) < key(b); });
        order.push_back(*best);
        touched |= bit(best->first) | bit(best->second);
        left.erase(best);
    }
    return order;
}

namespace {

constexpr std::array<EdgeState, 3> kStates = {EdgeState::forward, EdgeState::backward, EdgeState::both};

bool rows_transitive(const VertexSet* out, int n) {
    for (int a = 0; a < n; ++a) {
        VertexSet two_step = 0;
        for (VertexSet s = out[a]; s; s &= s - 1) two_step |= out[std::countr_zero(s)];
        if (two_step & ~bit(a) & ~out[a]) return false;
    }
    return true;
}

// Backtracking over edge states. Each decision is checked against every
// length-2 directed path whose edges are all decided, so a complete
// assignment that survives is transitive.
class TransitiveSearch {
public:
    TransitiveSearch(const Graph& g, const std::vector<std::pair<int, int>>& order)
        : g_(g), order_(order), n_(g.order()) {}

    bool assign(std::size_t depth, EdgeState state) {
        auto [u, v] = order_[depth];
        Saved& s = saved_[depth];
        s = {out_[u], out_[v], in_[u], in_[v], decided_[u], decided_[v]};
        decided_[u] |= bit(v);
        decided_[v] |= bit(u);
        bool ok = true;
        if (state != EdgeState::backward) add_arc(u, v);
        if (state != EdgeState::forward) add_arc(v, u);
        if (state != EdgeState::backward) ok = ok && arc_consistent(u, v);
        if (state != EdgeState::forward) ok = ok && arc_consistent(v, u);
        ok = ok && closure_consistent(u, v) && closure_consistent(v, u);
        return ok;
    }

    void undo(std::size_t depth) {
        auto [u, v] = order_[depth];
        const Saved& s = saved_[depth];
        out_[u] = s.out_u;
        out_[v] = s.out_v;
        in_[u] = s.in_u;
        in_[v] = s.in_v;
        decided_[u] = s.dec_u;
        decided_[v] = s.dec_v;
    }

    template <typename Leaf>
    void run(std::size_t depth, Leaf&& leaf) {
        if (depth == order_.size()) {
            if (!rows_transitive(out_.data(), n_)) {
                throw Error(Errc::internal_error, "search produced a non-transitive digraph");
            }
            leaf(*this);
            return;
        }
        for (EdgeState state : kStates) {
            if (assign(depth, state)) run(depth + 1, leaf);
            undo(depth);
        }
    }

    Digraph digraph() const {
        return Digraph(std::vector<VertexSet>(out_.begin(), out_.begin() + n_));
    }

private:
    struct Saved {
        VertexSet out_u, out_v, in_u, in_v, dec_u, dec_v;
    };

    void add_arc(int x, int y) {
        out_[x] |= bit(y);
        in_[y] |= bit(x);
    }

    // New arc x->y: every y->z needs x->z, every w->x needs w->y.
    bool arc_consistent(int x, int y) const {
        VertexSet succ = out_[y] & ~bit(x);
        if (succ & ~g_.neighbors(x)) return false;
        if (succ & decided_[x] & ~out_[x]) return false;
        VertexSet pred = in_[x] & ~bit(y);
        if (pred & ~g_.neighbors(y)) return false;
        if (pred & decided_[y] & ~in_[y]) return false;
        return true;
    }

    // A path x->z->y through decided edges needs the arc x->y.
    bool closure_consistent(int x, int y) const { return !(out_[x] & in_[y]) || (out_[x] & bit(y)); }

    const Graph& g_;
    const std::vector<std::pair<int, int>>& order_;
    int n_;
    std::array<VertexSet, kMaxVertices> out_{};
    std::array<VertexSet, kMaxVertices> in_{};
    std::array<VertexSet, kMaxVertices> decided_{};
    std::array<Saved, kMaxVertices * (kMaxVertices - 1) / 2> saved_{};
};

void check_budget(const Graph& g, const EnumerationOptions& options) {
    if (g.edge_count() > options.budget_edges) {
        throw Error(Errc::budget_exceeded, std::to_string(g.edge_count()) + " edges exceed the budget of " +
                                               std::to_string(options.budget_edges) +
                                               " (raise it with --budget-edges)");
    }
}

// Feasible state prefixes of length `depth`, in search order.
std::vector<std::vector<EdgeState>> feasible_prefixes(const Graph& g, const std::vector<std::pair<int, int>>& order,
                                                      std::size_t depth) {
    std::vector<std::vector<EdgeState>> out;
    std::vector<EdgeState> current;
    auto search = std::make_unique<TransitiveSearch>(g, order);
    auto walk = [&](auto&& self, std::size_t d) -> void {
        if (d == depth) {
            out.push_back(current);
            return;
        }
        for (EdgeState state : kStates) {
            current.push_back(state);
            if (search->assign(d, state)) self(self, d + 1);
            search->undo(d);
            current.pop_back();
        }
    };
    walk(walk, 0);
    return out;
}

std::size_t split_depth(std::size_t edges, unsigned workers) {
    if (workers <= 1) return 0;
    std::size_t depth = 0;
    std::size_t tasks = 1;
    while (tasks < 4 * static_cast<std::size_t>(workers) && depth < edges) {
        tasks *= 3;
        ++depth;
    }
    return depth;
}

// Runs `task(index)` for every index on up to `workers` threads. Exceptions
// are captured and the first one (by index) is rethrown.
template <typename Task>
void run_tasks(std::size_t count, unsigned workers, Task&& task) {
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < count; i = next++) {
            try {
                task(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    unsigned threads = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

template <typename Leaf>
void run_prefix(const Graph& g, const std::vector<std::pair<int, int>>& order, const std::vector<EdgeState>& prefix,
                Leaf&& leaf) {
    auto search = std::make_unique<TransitiveSearch>(g, order);
    for (std::size_t d = 0; d < prefix.size(); ++d) {
        if (!search->assign(d, prefix[d])) throw Error(Errc::internal_error, "feasible prefix rejected on replay");
    }
    search->run(prefix.size(), leaf);
}

}  // namespace

void for_each_transitive_digraph(const Graph& g, const EnumerationOptions& options,
                                 const std::function<void(const Digraph&)>& visit) {
    check_budget(g, options);
    auto order = search_edge_order(g);
    std::size_t depth = split_depth(order.size(), options.workers);
    if (depth == 0) {
        run_prefix(g, order, {}, [&](const TransitiveSearch& s) { visit(s.digraph()); });
        return;
    }
    auto prefixes = feasible_prefixes(g, order, depth);
    std::vector<std::vector<Digraph>> chunks(prefixes.size());
    run_tasks(prefixes.size(), options.workers, [&](std::size_t i) {
        run_prefix(g, order, prefixes[i], [&](const TransitiveSearch& s) { chunks[i].push_back(s.digraph()); });
    });
    for (const auto& chunk : chunks)
        for (const auto& d : chunk) visit(d);
}

std::vector<Digraph> enumerate_transitive_digraphs(const Graph& g, const EnumerationOptions& options) {
    std::vector<Digraph> out;
    for_each_transitive_digraph(g, options, [&](const Digraph& d) { out.push_back(d); });
    return out;
}

Count tau(const Graph& g, const EnumerationOptions& options) {
    check_budget(g, options);
    auto order = search_edge_order(g);
    std::size_t depth = split_depth(order.size(), options.workers);
    auto prefixes = depth == 0 ? std::vector<std::vector<EdgeState>>{{}} : feasible_prefixes(g, order, depth);
    std::vector<Count> partial(prefixes.size(), 0);
    run_tasks(prefixes.size(), options.workers, [&](std::size_t i) {
        run_prefix(g, order, prefixes[i], [&](const TransitiveSearch&) { ++partial[i]; });
    });
    Count total = 0;
    for (Count c : partial) total = checked_add(total, c);
    return total;
}

Count fix_count(std::span<const Digraph> digraphs, const Permutation& sigma) {
    return static_cast<Count>(
        std::count_if(digraphs.begin(), digraphs.end(), [&](const Digraph& d) { return is_fixed_by(d, sigma); }));
}

Count fix_count(const Graph& g, const Permutation& sigma, const EnumerationOptions& options) {
    if (!is_automorphism(g, sigma)) throw Error(Errc::not_an_automorphism, "permutation does not preserve G");
    auto digraphs = enumerate_transitive_digraphs(g, options);
    return fix_count(digraphs, sigma);
}

namespace {

// Fixed-point counts are constant on conjugacy classes when the digraph set is
// invariant under the group, so one representative per class suffices.
Count burnside_average(std::span<const Permutation> group, std::span<const Digraph> digraphs, const char* what) {
    Count total = 0;
    for (const auto& cls : conjugacy_classes(group)) {
        total = checked_add(total, checked_mul(cls.size(), fix_count(digraphs, group[cls.front()])));
    }
    return exact_divide(total, group.size(), what);
}

}  // namespace

Count h_burnside(const Graph& g, std::span<const Digraph> digraphs) {
    AutGroup group = automorphism_group(g);
    return burnside_average(group.elements(), digraphs, "Burnside average");
}

Count h_burnside(const Graph& g, const EnumerationOptions& options) {
    auto digraphs = enumerate_transitive_digraphs(g, options);
    return h_burnside(g, digraphs);
}

ClassListing digraph_classes(std::span<const Digraph> digraphs) {
    ClassListing out;
    std::set<CanonicalCode> seen;
    for (const auto& d : digraphs) {
        if (seen.insert(canonical_code_digraph(d)).second) out.representatives.push_back(d);
    }
    out.count = seen.size();
    return out;
}

Count h_classes(const Graph& g, const EnumerationOptions& options) {
    auto digraphs = enumerate_transitive_digraphs(g, options);
    return digraph_classes(digraphs).count;
}

bool is_sink(const Digraph& d, int v) { return d.out(v) == 0; }

bool is_source(const Digraph& d, int v) {
    for (int u = 0; u < d.order(); ++u)
        if (d.has_arc(u, v)) return false;
    return true;
}

namespace {

void check_anchor(const Graph& g, int u) {
    if (u < 0 || u >= g.order()) throw Error(Errc::vertex_out_of_range, "vertex " + std::to_string(u));
}

std::vector<Digraph> sinks_at(std::span<const Digraph> digraphs, int u) {
    std::vector<Digraph> out;
    for (const auto& d : digraphs)
        if (is_sink(d, u)) out.push_back(d);
    return out;
}

}  // namespace

Count tau_sink(const Graph& g, int u, const EnumerationOptions& options) {
    check_anchor(g, u);
    Count c = 0;
    for_each_transitive_digraph(g, options, [&](const Digraph& d) { c += is_sink(d, u) ? 1 : 0; });
    return c;
}

Count tau_source(const Graph& g, int u, const EnumerationOptions& options) {
    check_anchor(g, u);
    Count c = 0;
    for_each_transitive_digraph(g, options, [&](const Digraph& d) { c += is_source(d, u) ? 1 : 0; });
    return c;
}

Count h_sink(const Graph& g, int u, std::span<const Digraph> digraphs) {
    check_anchor(g, u);
    auto sinks = sinks_at(digraphs, u);
    std::vector<Permutation> stab = automorphism_group(g).stabilizer(u);
    return burnside_average(stab, sinks, "stabiliser Burnside average");
}

Count h_sink(const Graph& g, int u, const EnumerationOptions& options) {
    auto digraphs = enumerate_transitive_digraphs(g, options);
    return h_sink(g, u, digraphs);
}

Count h_sink_classes(const Graph& g, int u, std::span<const Digraph> digraphs) {
    check_anchor(g, u);
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
    colors[u] = 0;
    std::set<CanonicalCode> seen;
    for (const auto& d : digraphs)
        if (is_sink(d, u)) seen.insert(canonical_code_digraph(d, colors));
    return seen.size();
}

std::optional<GraphCounts> CountCache::find(const CanonicalCode& code) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(code);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::insert(const CanonicalCode& code, GraphCounts counts) {
    std::lock_guard lock(mutex_);
    entries_.emplace(code, counts);
}

void CountCache::overwrite(const CanonicalCode& code, GraphCounts counts) {
    std::lock_guard lock(mutex_);
    entries_.insert_or_assign(code, counts);
}

std::size_t CountCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

GraphCounts enumeration_counts(const Graph& g, const EnumerationOptions& options, CountCache* cache) {
    std::optional<CanonicalCode> code;
    if (cache) {
        code = canonical_code(g);
        if (auto hit = cache->find(*code)) return *hit;
    }
    auto digraphs = enumerate_transitive_digraphs(g, options);
    GraphCounts counts{digraphs.size(), digraph_classes(digraphs).count};
    if (cache) cache->insert(*code, counts);
    return counts;
}

std::string method_name(CountMethod m) {
    switch (m) {
        case CountMethod::enumeration: return "enumeration";
        case CountMethod::burnside: return "burnside";
        case CountMethod::formula: return "formula";
    }
    return "unknown";
}

CountReport count_graph(const Graph& g, CountMethod method, const EnumerationOptions& options) {
    auto start = std::chrono::steady_clock::now();
    CountReport report;
    report.graph = canonical_code(g);
    report.method = method;
    auto digraphs = enumerate_transitive_digraphs(g, options);
    report.tau = digraphs.size();
    if (method == CountMethod::burnside) {
        report.h = h_burnside(g, digraphs);
    } else {
        report.h = digraph_classes(digraphs).count;
    }
    if ((report.h == 0) != (report.tau == 0) || report.h > report.tau) {
        throw Error(Errc::internal_error, "inconsistent counts");
    }
    report.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

}  // namespace fintop

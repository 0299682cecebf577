#pragma once
// Brute-force reference implementations. These deliberately avoid the
// library's search code: everything here is exhaustive over permutations,
// orientations or maps, and only uses the plain data types.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "fintop/digraph.hpp"
#include "fintop/graph.hpp"

namespace oracle_bf {

using fintop::Digraph;
using fintop::Graph;
using fintop::VertexSet;

inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

inline bool transitive(const std::vector<VertexSet>& rows) {
    int n = static_cast<int>(rows.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (!((rows[a] >> b) & 1U)) continue;
            for (int c = 0; c < n; ++c)
                if (c != a && ((rows[b] >> c) & 1U) && !((rows[a] >> c) & 1U)) return false;
        }
    return true;
}

// All 3^m orientations, kept when transitive.
inline std::vector<std::vector<VertexSet>> transitive_orientations(const Graph& g) {
    auto e = edge_list(g);
    std::vector<std::vector<VertexSet>> out;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < e.size(); ++i) total *= 3;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<VertexSet> rows(g.order(), 0);
        std::uint64_t c = code;
        for (auto [u, v] : e) {
            int s = static_cast<int>(c % 3);
            c /= 3;
            if (s != 1) rows[u] |= VertexSet{1} << v;
            if (s != 0) rows[v] |= VertexSet{1} << u;
        }
        if (transitive(rows)) out.push_back(std::move(rows));
    }
    return out;
}

inline std::vector<VertexSet> relabel(const std::vector<VertexSet>& rows, const std::vector<int>& p) {
    int n = static_cast<int>(rows.size());
    std::vector<VertexSet> r(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if ((rows[a] >> b) & 1U) r[p[a]] |= VertexSet{1} << p[b];
    return r;
}

inline std::vector<VertexSet> adjacency(const Graph& g) {
    std::vector<VertexSet> r;
    for (int v = 0; v < g.order(); ++v) r.push_back(g.neighbors(v));
    return r;
}

inline std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
    auto a = adjacency(g);
    std::vector<std::vector<int>> out;
    for (auto& p : all_perms(g.order()))
        if (relabel(a, p) == a) out.push_back(p);
    return out;
}

inline std::vector<VertexSet> min_form(const std::vector<VertexSet>& rows,
                                       const std::vector<std::vector<int>>& perms) {
    std::vector<VertexSet> best;
    for (auto& p : perms) {
        auto r = relabel(rows, p);
        if (best.empty() || r < best) best = r;
    }
    return best;
}

// Orbits of the transitive orientations under Aut(G), by explicit images.
inline std::size_t orbit_count(const Graph& g) {
    auto aut = automorphisms(g);
    std::set<std::vector<VertexSet>> seen;
    for (auto& d : transitive_orientations(g)) seen.insert(min_form(d, aut));
    return seen.size();
}

inline std::size_t iso_classes(int n) {
    int m = n * (n - 1) / 2;
    auto perms = all_perms(n);
    std::set<std::vector<VertexSet>> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<VertexSet> rows(n, 0);
        int i = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++i)
                if ((mask >> i) & 1U) {
                    rows[u] |= VertexSet{1} << v;
                    rows[v] |= VertexSet{1} << u;
                }
        seen.insert(min_form(rows, perms));
    }
    return seen.size();
}

// Set partitions of {0..n-1} into exactly k blocks, by restricted growth strings.
inline std::uint64_t set_partitions(int n, int k) {
    std::uint64_t count = 0;
    std::vector<int> a(n, 0);
    auto rec = [&](auto&& self, int i, int blocks) -> void {
        if (i == n) {
            if (blocks == k) ++count;
            return;
        }
        for (int b = 0; b <= blocks && b < k; ++b) {
            a[i] = b;
            self(self, i + 1, std::max(blocks, b + 1));
        }
    };
    if (n == 0) return k == 0 ? 1 : 0;
    rec(rec, 0, 0);
    return count;
}

}  // namespace oracle_bf

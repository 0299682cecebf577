#include "fintop/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "fintop/error.hpp"

namespace fintop {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    int n = size();
    std::vector<bool> hit(static_cast<std::size_t>(n), false);
    for (int v : image_) {
        if (v < 0 || v >= n || hit[v]) throw Error(Errc::range, "image is not a bijection");
        hit[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image_[v] != v) return false;
    return true;
}

VertexSet Permutation::apply(VertexSet s) const {
    VertexSet out = 0;
    while (s) {
        out |= bit(image_[std::countr_zero(s)]);
        s &= s - 1;
    }
    return out;
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size()) throw Error(Errc::range, "composing permutations of different sizes");
    std::vector<int> image(static_cast<std::size_t>(p.size()));
    for (int v = 0; v < p.size(); ++v) image[v] = p(q(v));
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> image(image_.size());
    for (int v = 0; v < size(); ++v) image[image_[v]] = v;
    return Permutation(std::move(image));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.size() != g.order()) return false;
    for (int v = 0; v < g.order(); ++v)
        if (p.apply(g.neighbors(v)) != g.neighbors(p(v))) return false;
    return true;
}

Digraph permute(const Digraph& d, const Permutation& p) {
    std::vector<VertexSet> rows(static_cast<std::size_t>(d.order()), 0);
    for (int v = 0; v < d.order(); ++v) rows[p(v)] = p.apply(d.out(v));
    return Digraph(std::move(rows));
}

Graph permute(const Graph& g, const Permutation& p) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(p(u), p(v));
    return out;
}

bool is_fixed_by(const Digraph& d, const Permutation& p) {
    for (int v = 0; v < d.order(); ++v)
        if (p.apply(d.out(v)) != d.out(p(v))) return false;
    return true;
}

AutGroup::AutGroup(std::vector<Permutation> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
}

std::vector<Permutation> AutGroup::stabilizer(int v) const {
    std::vector<Permutation> out;
    for (const auto& p : elements_)
        if (p(v) == v) out.push_back(p);
    return out;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(std::span<const Permutation> group) {
    if (group.empty()) return {};
    int n = group.front().size();
    if (n > kMaxSymmetryVertices) throw Error(Errc::size_bound_exceeded, "permutations too large to index");
    // 4 bits per point is enough for n <= 16
    auto key = [](const Permutation& p) {
        std::uint64_t k = 0;
        for (int v = 0; v < p.size(); ++v) k |= static_cast<std::uint64_t>(p(v)) << (4 * v);
        return k;
    };
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < group.size(); ++i) index.emplace(key(group[i]), i);
    auto find = [&](const Permutation& p) {
        auto it = index.find(key(p));
        if (it == index.end()) throw Error(Errc::internal_error, "permutation set is not closed");
        return it->second;
    };

    // generators: add any element outside the subgroup generated so far
    std::vector<Permutation> gens;
    std::vector<bool> in_sub(group.size(), false);
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (group[i].is_identity()) {
            in_sub[i] = true;
            sub.push_back(i);
        }
    }
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (in_sub[i]) continue;
        gens.push_back(group[i]);
        for (std::size_t head = 0; head < sub.size(); ++head) {
            for (const auto& g : gens) {
                std::size_t j = find(group[sub[head]] * g);
                if (!in_sub[j]) {
                    in_sub[j] = true;
                    sub.push_back(j);
                }
            }
        }
    }

    std::vector<Permutation> inverses;
    for (const auto& g : gens) inverses.push_back(g.inverse());
    std::vector<bool> seen(group.size(), false);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < group.size(); ++i) {
        if (seen[i]) continue;
        seen[i] = true;
        std::vector<std::size_t> cls{i};
        for (std::size_t head = 0; head < cls.size(); ++head) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                std::size_t j = find(gens[k] * group[cls[head]] * inverses[k]);
                if (!seen[j]) {
                    seen[j] = true;
                    cls.push_back(j);
                }
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

namespace {

using Cells = std::vector<std::vector<int>>;

void check_symmetry_bound(int n) {
    if (n > kMaxSymmetryVertices) {
        throw Error(Errc::size_bound_exceeded, "symmetry search limited to " +
                                                   std::to_string(kMaxSymmetryVertices) + " vertices, got " +
                                                   std::to_string(n));
    }
}

// Directed adjacency view shared by the graph and digraph searches; for a
// graph the in-rows equal the out-rows.
struct Structure {
    int n = 0;
    std::vector<VertexSet> out;
    std::vector<VertexSet> in;

    bool twins(int v, int w) const {
        VertexSet mask = ~(bit(v) | bit(w));
        return (out[v] & mask) == (out[w] & mask) && (in[v] & mask) == (in[w] & mask) &&
               (((out[v] >> w) & 1U) == ((out[w] >> v) & 1U));
    }
};

Structure from_graph(const Graph& g) {
    Structure s;
    s.n = g.order();
    for (int v = 0; v < s.n; ++v) s.out.push_back(g.neighbors(v));
    s.in = s.out;
    return s;
}

Structure from_digraph(const Digraph& d) {
    Structure s;
    s.n = d.order();
    s.out = d.rows();
    s.in.assign(static_cast<std::size_t>(s.n), 0);
    for (int v = 0; v < s.n; ++v)
        for (int w : members(s.out[v])) s.in[w] |= bit(v);
    return s;
}

Cells initial_cells(int n, std::span<const int> colors) {
    if (colors.empty()) {
        Cells cells(1);
        for (int v = 0; v < n; ++v) cells[0].push_back(v);
        if (n == 0) cells.clear();
        return cells;
    }
    if (static_cast<int>(colors.size()) != n) throw Error(Errc::range, "colour vector length mismatch");
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    Cells cells;
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (i == 0 || colors[order[i]] != colors[order[i - 1]]) cells.emplace_back();
        cells.back().push_back(order[i]);
    }
    return cells;
}

// Splits cells by neighbour counts into every cell until the partition is
// equitable. Sub-cells are ordered by signature, so the result depends only on
// the isomorphism type of (structure, input partition).
void refine(const Structure& s, Cells& cells) {
    for (;;) {
        std::vector<VertexSet> masks;
        masks.reserve(cells.size());
        for (const auto& cell : cells) {
            VertexSet m = 0;
            for (int v : cell) m |= bit(v);
            masks.push_back(m);
        }
        Cells next;
        next.reserve(cells.size());
        std::vector<std::pair<std::vector<int>, int>> keyed;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            keyed.clear();
            for (int v : cell) {
                std::vector<int> sig;
                sig.reserve(2 * masks.size());
                for (VertexSet m : masks) {
                    sig.push_back(popcount(s.out[v] & m));
                    sig.push_back(popcount(s.in[v] & m));
                }
                keyed.emplace_back(std::move(sig), v);
            }
            std::sort(keyed.begin(), keyed.end());
            for (std::size_t i = 0; i < keyed.size(); ++i) {
                if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
                next.back().push_back(keyed[i].second);
            }
        }
        bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable) return;
    }
}

class CanonicalSearch {
public:
    CanonicalSearch(const Structure& s, Cells cells) : s_(s) { search(std::move(cells)); }

    const std::vector<VertexSet>& best_rows() const { return best_rows_; }
    const std::vector<int>& best_labeling() const { return best_lab_; }

private:
    void search(Cells cells) {
        refine(s_, cells);
        if (static_cast<int>(cells.size()) == s_.n) {
            leaf(cells);
            return;
        }
        std::size_t target = cells.size();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size()))
                target = i;
        }
        const std::vector<int> cell = cells[target];
        std::vector<int> tried;
        for (int v : cell) {
            // Swapping v with an already explored twin is an automorphism fixing
            // every individualised vertex, so the subtree would repeat.
            bool redundant = std::any_of(tried.begin(), tried.end(), [&](int t) { return s_.twins(t, v); });
            if (redundant) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cell)
                    if (w != v) rest.push_back(w);
                child.push_back(std::move(rest));
            }
            search(std::move(child));
        }
    }

    void leaf(const Cells& cells) {
        std::vector<int> lab(static_cast<std::size_t>(s_.n));
        std::vector<int> pos(static_cast<std::size_t>(s_.n));
        for (int i = 0; i < s_.n; ++i) {
            lab[i] = cells[i][0];
            pos[lab[i]] = i;
        }
        std::vector<VertexSet> rows(static_cast<std::size_t>(s_.n), 0);
        for (int i = 0; i < s_.n; ++i)
            for (int w : members(s_.out[lab[i]])) rows[i] |= bit(pos[w]);
        if (best_lab_.empty() || rows < best_rows_) {
            best_rows_ = std::move(rows);
            best_lab_ = std::move(lab);
        }
    }

    const Structure& s_;
    std::vector<VertexSet> best_rows_;
    std::vector<int> best_lab_;
};

CanonicalCode make_code(const Structure& s, std::span<const int> colors, std::vector<int>* labeling = nullptr) {
    check_symmetry_bound(s.n);
    CanonicalSearch search(s, initial_cells(s.n, colors));
    CanonicalCode code;
    code.n = s.n;
    code.rows = search.best_rows();
    if (!colors.empty()) {
        for (int v : search.best_labeling()) code.colors.push_back(colors[v]);
    }
    if (labeling) *labeling = search.best_labeling();
    return code;
}

}  // namespace

void for_each_automorphism(const Graph& g, std::span<const VertexSet> allowed,
                           const std::function<bool(const Permutation&)>& visit) {
    int n = g.order();
    check_symmetry_bound(n);
    if (!allowed.empty() && static_cast<int>(allowed.size()) != n)
        throw Error(Errc::range, "allowed-image vector length mismatch");

    Structure s = from_graph(g);
    Cells cells = initial_cells(n, {});
    refine(s, cells);
    std::vector<VertexSet> same_cell(static_cast<std::size_t>(n), 0);
    for (const auto& cell : cells) {
        VertexSet m = 0;
        for (int v : cell) m |= bit(v);
        for (int v : cell) same_cell[v] = m;
    }
    std::vector<VertexSet> candidates(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) candidates[v] = same_cell[v] & (allowed.empty() ? ~VertexSet{0} : allowed[v]);

    // Visit vertices so that each one has as many already-placed neighbours as
    // possible; adjacency constraints then cut the search early.
    std::vector<int> order;
    VertexSet placed = 0;
    while (static_cast<int>(order.size()) < n) {
        int pick = -1;
        int best_links = -1;
        std::size_t best_cands = 0;
        for (int v = 0; v < n; ++v) {
            if (placed & bit(v)) continue;
            int links = popcount(g.neighbors(v) & placed);
            auto cands = static_cast<std::size_t>(popcount(candidates[v]));
            if (links > best_links || (links == best_links && cands < best_cands)) {
                pick = v;
                best_links = links;
                best_cands = cands;
            }
        }
        order.push_back(pick);
        placed |= bit(pick);
    }

    std::vector<int> image(static_cast<std::size_t>(n), -1);
    bool stop = false;
    auto recurse = [&](auto&& self, int depth, VertexSet domain, VertexSet used) -> void {
        if (stop) return;
        if (depth == n) {
            if (!visit(Permutation(image))) stop = true;
            return;
        }
        int v = order[depth];
        VertexSet expected = 0;
        for (int x : members(g.neighbors(v) & domain)) expected |= bit(image[x]);
        for (int w : members(candidates[v] & ~used)) {
            if ((g.neighbors(w) & used) != expected) continue;
            image[v] = w;
            self(self, depth + 1, domain | bit(v), used | bit(w));
            if (stop) return;
        }
        image[v] = -1;
    };
    recurse(recurse, 0, 0, 0);
}

AutGroup automorphism_group(const Graph& g) {
    std::vector<Permutation> elements;
    for_each_automorphism(g, {}, [&](const Permutation& p) {
        if (elements.size() >= kMaxGroupOrder) {
            throw Error(Errc::size_bound_exceeded,
                        "automorphism group larger than " + std::to_string(kMaxGroupOrder) + " elements");
        }
        elements.push_back(p);
        return true;
    });
    return AutGroup(std::move(elements));
}

Count automorphism_count(const Graph& g) {
    Count count = 0;
    for_each_automorphism(g, {}, [&](const Permutation&) {
        ++count;
        return true;
    });
    return count;
}

bool is_reflexible(const Graph& g) {
    if (!is_connected(g)) throw Error(Errc::not_connected, "reflexibility needs a connected graph");
    auto parts = bipartition(g);
    if (!parts) throw Error(Errc::not_bipartite, "reflexibility needs a bipartite graph");
    std::vector<VertexSet> allowed(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) allowed[v] = (parts->first & bit(v)) ? parts->second : parts->first;
    bool found = false;
    for_each_automorphism(g, allowed, [&](const Permutation&) {
        found = true;
        return false;
    });
    return found;
}

std::string CanonicalCode::to_hex() const {
    std::ostringstream out;
    out << n << ':';
    int width = std::max(1, (n + 3) / 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out << '.';
        out << std::hex << std::setw(width) << std::setfill('0') << rows[i] << std::dec;
    }
    if (!colors.empty()) {
        out << '/';
        for (std::size_t i = 0; i < colors.size(); ++i) out << (i ? "," : "") << colors[i];
    }
    return out.str();
}

CanonicalCode canonical_code(const Graph& g) { return make_code(from_graph(g), {}); }

CanonicalCode canonical_code(const Graph& g, std::span<const int> colors) {
    return make_code(from_graph(g), colors);
}

CanonicalCode canonical_code_digraph(const Digraph& d) { return make_code(from_digraph(d), {}); }

CanonicalCode canonical_code_digraph(const Digraph& d, std::span<const int> colors) {
    return make_code(from_digraph(d), colors);
}

Graph graph_from_code(const CanonicalCode& code) {
    Graph g(code.n);
    for (int u = 0; u < code.n; ++u)
        for (int v : members(code.rows[u]))
            if (u < v) g.add_edge(u, v);
    return g;
}

std::vector<int> canonical_labeling(const Graph& g) {
    std::vector<int> lab;
    make_code(from_graph(g), {}, &lab);
    return lab;
}

bool rooted_isomorphic(const Graph& g, int u, const Graph& h, int v) {
    if (g.order() != h.order()) return false;
    if (u < 0 || u >= g.order() || v < 0 || v >= h.order())
        throw Error(Errc::vertex_out_of_range, "rooted isomorphism anchor");
    std::vector<int> cg(static_cast<std::size_t>(g.order()), 1);
    std::vector<int> ch(static_cast<std::size_t>(h.order()), 1);
    cg[u] = 0;
    ch[v] = 0;
    return canonical_code(g, cg) == canonical_code(h, ch);
}

}  // namespace fintop

#include <doctest.h>

#include <random>
#include <set>
#include <sstream>

#include "fintop/arith.hpp"
#include "fintop/graph.hpp"
#include "fintop/symmetry.hpp"
#include "oracles.hpp"

using namespace fintop;

namespace {

Graph K(int n) { return build_named(Family::complete, n); }
Graph C(int n) { return build_named(Family::cycle, n); }
Graph P(int l) { return build_named(Family::path, l); }

Graph star(int leaves) {
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Permutation random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return Permutation(p);
}

}  // namespace

TEST_CASE("named graphs") {
    Graph k2 = K(2);
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);

    Graph w7 = build_named(Family::wheel, 7);
    CHECK(w7.order() == 7);
    CHECK(w7.edge_count() == 12);
    int hubs = 0;
    for (int v = 0; v < 7; ++v) hubs += w7.degree(v) == 6;
    CHECK(hubs == 1);

    CHECK(P(2).order() == 3);
    CHECK(P(2).edge_count() == 2);
    CHECK(build_named(Family::null, 3).edge_count() == 0);
    CHECK(C(5).edge_count() == 5);

    auto bad = [](Family f, int n) {
        try {
            build_named(f, n);
        } catch (const Error& e) {
            return e.code() == Errc::invalid_family_size;
        }
        return false;
    };
    CHECK(bad(Family::cycle, 2));
    CHECK(bad(Family::wheel, 3));
    CHECK(bad(Family::complete, 0));
    CHECK(bad(Family::null, -1));
}

TEST_CASE("disjoint union") {
    Graph g = disjoint_union(K(2), K(2));
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(components(g).size() == 2);

    Graph h = disjoint_union(K(2), build_named(Family::null, 1));
    CHECK(h.order() == 3);
    CHECK(h.edge_count() == 1);

    Graph c = disjoint_union(C(3), K(2));
    CHECK(c.order() == 5);
    CHECK(c.edge_count() == 4);
}

TEST_CASE("cartesian product") {
    Graph sq = cartesian_product(K(2), K(2));
    CHECK(canonical_code(sq) == canonical_code(C(4)));

    Graph prism = cartesian_product(K(2), C(3));
    CHECK(prism.order() == 6);
    CHECK(prism.edge_count() == 9);

    Graph k2c4 = cartesian_product(K(2), C(4));
    CHECK(k2c4.order() == 8);
    CHECK(k2c4.edge_count() == 12);

    // |E(G x H)| = |V(G)||E(H)| + |E(G)||V(H)|
    Graph g = P(3), h = C(5);
    Graph gh = cartesian_product(g, h);
    CHECK(gh.edge_count() == g.order() * h.edge_count() + g.edge_count() * h.order());
}

TEST_CASE("amalgamation") {
    Graph p2 = amalgamate(K(2), 1, K(2), 0);
    CHECK(canonical_code(p2) == canonical_code(P(2)));

    Graph bowtie = amalgamate(K(3), 0, K(3), 0);
    CHECK(bowtie.order() == 5);
    CHECK(bowtie.edge_count() == 6);
    CHECK(bowtie.degree(0) == 4);

    Graph paw = amalgamate(K(3), 0, K(2), 0);
    CHECK(paw.order() == 4);
    CHECK(paw.edge_count() == 4);
    CHECK(has_triangle(paw));

    // order is |G| + |H| - 1 and edges add
    Graph a = amalgamate(C(5), 2, P(3), 1);
    CHECK(a.order() == 5 + 4 - 1);
    CHECK(a.edge_count() == 5 + 3);
    CHECK(a.has_edge(2, amalgam_index_of_h(5, 1, 0)));
    CHECK(a.has_edge(2, amalgam_index_of_h(5, 1, 2)));
}

TEST_CASE("components, cut vertices, induced subgraphs") {
    CHECK(components(disjoint_union(K(2), K(2))).size() == 2);
    Graph bowtie = amalgamate(K(3), 0, K(3), 0);
    CHECK(is_cut_vertex(bowtie, 0));
    CHECK_FALSE(is_cut_vertex(bowtie, 1));
    CHECK(cut_vertices(bowtie) == std::vector<int>{0});
    CHECK(cut_vertices(C(6)).empty());
    CHECK(cut_vertices(P(3)) == std::vector<int>{1, 2});

    Graph prism = cartesian_product(K(2), C(3));
    // (0,*) is vertices 0,1,2
    Graph tri = induced_subgraph(prism, 0b000111);
    CHECK(canonical_code(tri) == canonical_code(C(3)));
    CHECK(is_connected(prism));
    CHECK_FALSE(is_connected(build_named(Family::null, 2)));
    CHECK(is_connected(Graph(0)));
}

TEST_CASE("bipartition") {
    auto c4 = bipartition(C(4));
    REQUIRE(c4);
    CHECK(c4->first == 0b0101);
    CHECK(c4->second == 0b1010);
    CHECK_FALSE(bipartition(C(3)));
    auto s = bipartition(star(3));
    REQUIRE(s);
    CHECK(s->first == 0b0001);
    CHECK(s->second == 0b1110);
}

TEST_CASE("reflexible") {
    CHECK(is_reflexible(C(4)));
    CHECK(is_reflexible(C(6)));
    CHECK_FALSE(is_reflexible(star(3)));
    CHECK(is_reflexible(K(2)));
    CHECK_FALSE(is_reflexible(P(2)));
    CHECK(is_reflexible(P(3)));
    // 2x3 grid; swapping the K2 coordinate exchanges the parts
    CHECK(is_reflexible(cartesian_product(K(2), P(2))));
    CHECK_THROWS_AS(is_reflexible(C(5)), Error);
    CHECK_THROWS_AS(is_reflexible(build_named(Family::null, 2)), Error);
}

TEST_CASE("reflexible agrees with a brute-force part swap search") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_graph(2 + trial % 6, rng);
        if (!is_connected(g)) continue;
        auto bp = bipartition(g);
        if (!bp) continue;
        bool swap = false;
        for (auto& p : oracle_bf::automorphisms(g)) {
            VertexSet img = 0;
            for (int v : members(bp->first)) img |= bit(p[v]);
            if (img == bp->second) swap = true;
        }
        CHECK(is_reflexible(g) == swap);
    }
}

TEST_CASE("automorphism group order") {
    CHECK(automorphism_group(K(3)).order() == 6);
    CHECK(automorphism_group(C(4)).order() == oracle_bf::automorphisms(C(4)).size());
    CHECK(automorphism_group(C(4)).order() == 8);
    CHECK(automorphism_group(P(2)).order() == oracle_bf::automorphisms(P(2)).size());
    CHECK(automorphism_group(P(2)).order() == 2);
    CHECK(automorphism_count(K(8)) == 40320);
    CHECK(automorphism_count(Graph(0)) == 1);

    auto grp = automorphism_group(C(5));
    CHECK(grp.elements()[0].is_identity());
    CHECK(grp.stabilizer(0).size() == 2);
    for (auto& p : grp.elements()) CHECK(is_automorphism(C(5), p));

    CHECK_THROWS_AS(automorphism_group(Graph(17)), Error);
}

TEST_CASE("automorphism count matches brute force on random graphs") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(1 + trial % 7, rng);
        CHECK(automorphism_count(g) == oracle_bf::automorphisms(g).size());
    }
}

TEST_CASE("permutation algebra") {
    Permutation p({1, 2, 0});
    Permutation q({0, 2, 1});
    CHECK((p * q)(1) == p(q(1)));
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.apply(0b001) == 0b010);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), Error);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
}

TEST_CASE("canonical codes") {
    Graph a = C(4);
    Graph b(4);
    b.add_edge(0, 2);
    b.add_edge(2, 1);
    b.add_edge(1, 3);
    b.add_edge(3, 0);
    CHECK(canonical_code(a) == canonical_code(b));
    CHECK(canonical_code(K(3)) != canonical_code(P(2)));
    CHECK(canonical_code(disjoint_union(K(2), K(2))) != canonical_code(P(3)));

    // code is a fixed point: decoding and re-encoding is stable
    Graph w = build_named(Family::wheel, 6);
    CHECK(canonical_code(graph_from_code(canonical_code(w))) == canonical_code(w));
    auto lab = canonical_labeling(w);
    std::vector<int> inv(lab.size());
    for (std::size_t i = 0; i < lab.size(); ++i) inv[lab[i]] = static_cast<int>(i);
    CHECK(permute(w, Permutation(inv)) == graph_from_code(canonical_code(w)));
}

TEST_CASE("canonical code is invariant under relabelling") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 6;
        Graph g = random_graph(n, rng);
        Graph h = permute(g, random_perm(n, rng));
        CHECK(canonical_code(g) == canonical_code(h));
    }
    // and it separates exactly the brute-force classes
    for (int n = 1; n <= 5; ++n) {
        std::set<CanonicalCode> codes;
        int m = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            Graph g(n);
            int i = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++i)
                    if ((mask >> i) & 1U) g.add_edge(u, v);
            codes.insert(canonical_code(g));
        }
        CHECK(codes.size() == oracle_bf::iso_classes(n));
    }
}

TEST_CASE("digraph canonical codes follow isomorphism") {
    std::mt19937 rng(5);
    std::bernoulli_distribution coin(0.4);
    auto random_digraph = [&](int n) {
        Digraph d(n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && coin(rng)) d.add_arc(u, v);
        return d;
    };
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + trial % 4;
        Digraph d = random_digraph(n);
        CHECK(canonical_code_digraph(d) == canonical_code_digraph(permute(d, random_perm(n, rng))));

        Digraph e = random_digraph(n);
        auto perms = oracle_bf::all_perms(n);
        bool iso = oracle_bf::min_form(d.rows(), perms) == oracle_bf::min_form(e.rows(), perms);
        CHECK((canonical_code_digraph(d) == canonical_code_digraph(e)) == iso);
    }
    Digraph one(2), other(2);
    one.add_arc(0, 1);
    other.add_arc(0, 1);
    other.add_arc(1, 0);
    CHECK(canonical_code_digraph(one) != canonical_code_digraph(other));
}

TEST_CASE("rooted isomorphism") {
    CHECK(rooted_isomorphic(K(3), 0, K(3), 2));
    CHECK(rooted_isomorphic(P(2), 0, P(2), 2));
    CHECK_FALSE(rooted_isomorphic(P(2), 0, P(2), 1));
    CHECK_FALSE(rooted_isomorphic(K(3), 0, C(4), 0));
    Graph paw = amalgamate(K(3), 0, K(2), 0);
    CHECK(rooted_isomorphic(paw, 1, paw, 2));
    CHECK_FALSE(rooted_isomorphic(paw, 0, paw, 1));
}

TEST_CASE("edge list io") {
    Graph g = build_named(Family::wheel, 5);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);

    std::istringstream ok("# comment\nn 3\ne 0 1\n\ne 1 2 # trailing\n");
    CHECK(read_edge_list(ok) == P(2));

    auto code_of = [](const std::string& text) {
        std::istringstream in(text);
        try {
            read_edge_list(in);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::internal_error;
    };
    CHECK(code_of("e 0 1\n") != Errc::internal_error);
    CHECK(code_of("n 2\ne 0 2\n") == Errc::vertex_out_of_range);
    CHECK(code_of("n 2\ne 1 1\n") == Errc::invalid_graph);
    CHECK(code_of("n 2\ne 0 1\ne 1 0\n") == Errc::invalid_graph);
    CHECK_THROWS_AS(read_edge_list_file("/nonexistent/graph.txt"), Error);
}

namespace {

// One graph per isomorphism class, by brute force over edge masks.
std::vector<Graph> connected_classes(int max_n, int min_n = 1) {
    std::vector<Graph> out;
    for (int n = min_n; n <= max_n; ++n) {
        std::set<CanonicalCode> seen;
        int m = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
            Graph g(n);
            int i = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++i)
                    if ((mask >> i) & 1U) g.add_edge(u, v);
            if (is_connected(g) && seen.insert(canonical_code(g)).second) out.push_back(g);
        }
    }
    return out;
}

}  // namespace

TEST_CASE("automorphism groups are groups of adjacency-preserving maps") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 1 + trial % 6;
        Graph g = random_graph(n, rng);
        auto grp = automorphism_group(g);
        CHECK(factorial(n) % grp.order() == 0);
        std::set<Permutation> elems(grp.elements().begin(), grp.elements().end());
        CHECK(elems.size() == grp.order());
        for (auto& p : grp.elements()) {
            for (auto [u, v] : g.edges()) CHECK(g.has_edge(p(u), p(v)));
            CHECK(elems.count(p.inverse()) == 1);
        }
    }
}

TEST_CASE("product is bipartite iff both factors are") {
    auto small = connected_classes(4);
    for (auto& g : small)
        for (auto& h : small) {
            bool both = bipartition(g).has_value() && bipartition(h).has_value();
            CHECK(bipartition(cartesian_product(g, h)).has_value() == both);
        }
}

TEST_CASE("product is reflexible iff a factor is") {
    auto parts = connected_classes(5, 2);
    int checked = 0;
    for (auto& g : parts)
        for (auto& h : parts) {
            if (g.order() * h.order() > 10 || !bipartition(g) || !bipartition(h)) continue;
            ++checked;
            CHECK(is_reflexible(cartesian_product(g, h)) == (is_reflexible(g) || is_reflexible(h)));
        }
    CHECK(checked > 0);
}

TEST_CASE("amalgamation is simple and adds orders") {
    auto parts = connected_classes(4);
    for (auto& g : parts)
        for (auto& h : parts)
            for (int u = 0; u < g.order(); ++u)
                for (int v = 0; v < h.order(); ++v) {
                    Graph a = amalgamate(g, u, h, v);
                    CHECK(a.order() == g.order() + h.order() - 1);
                    CHECK(a.edge_count() == g.edge_count() + h.edge_count());
                    for (int x = 0; x < a.order(); ++x) CHECK_FALSE(a.has_edge(x, x));
                    CHECK(induced_subgraph(a, low_bits(g.order())) == g);
                }
}

TEST_CASE("conjugacy classes") {
    auto sizes = [](const Graph& g) {
        auto grp = automorphism_group(g);
        std::multiset<std::size_t> s;
        for (auto& c : conjugacy_classes(grp.elements())) s.insert(c.size());
        return s;
    };
    CHECK(sizes(K(4)) == std::multiset<std::size_t>{1, 3, 6, 6, 8});
    CHECK(sizes(C(4)) == std::multiset<std::size_t>{1, 1, 2, 2, 2});
    CHECK(sizes(C(5)) == std::multiset<std::size_t>{1, 2, 2, 5});
    CHECK(sizes(K(8)).size() == 22);

    std::mt19937 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(2 + trial % 5, rng);
        auto grp = automorphism_group(g);
        auto elems = grp.elements();
        std::vector<bool> hit(elems.size(), false);
        for (auto& cls : conjugacy_classes(elems)) {
            for (std::size_t i : cls) {
                CHECK_FALSE(hit[i]);
                hit[i] = true;
                // every member is a conjugate of the first
                bool found = false;
                for (auto& t : elems) found = found || t * elems[cls.front()] * t.inverse() == elems[i];
                CHECK(found);
            }
        }
        CHECK(std::count(hit.begin(), hit.end(), true) == static_cast<long>(elems.size()));
    }
}

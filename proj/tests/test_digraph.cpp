#include "doctest.h"

#include <algorithm>

#include "backedge/digraph.hpp"
#include "backedge/generators.hpp"
#include "backedge/rng.hpp"

using namespace backedge;

namespace {

Digraph c3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph digon2() { return Digraph(2, {{0, 1}, {1, 0}}); }

} // namespace

TEST_CASE("digraph construction validates its invariants") {
    Digraph d = make_digraph(3, {{0, 1}, {1, 2}, {2, 0}});
    CHECK(d == c3());
    CHECK(d.n() == 3);
    CHECK(d.arc_count() == 3);
    CHECK(d.has_arc(0, 1));
    CHECK(!d.has_arc(1, 0));

    CHECK(digon2().arc_count() == 2);

    CHECK_THROWS_AS(Digraph(1, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), GraphError);
    CHECK_THROWS_AS(Digraph(2, {{0, 2}}), GraphError);
}

TEST_CASE("ordering is a validated bijection") {
    Ordering ord({2, 0, 1});
    CHECK(ord.position(2) == 0);
    CHECK(ord.at(2) == 1);
    CHECK(ord.reversed().perm() == std::vector<Vertex>{1, 0, 2});
    CHECK_THROWS_AS(Ordering({0, 0, 1}), GraphError);
    CHECK_THROWS_AS(Ordering({0, 3}), GraphError);
}

TEST_CASE("backedge graph follows the backward-arc rule") {
    // C3 under the identity has the single backward arc (2,0).
    UndirectedGraph g = backedge_graph(c3(), Ordering::identity(3));
    CHECK(g.edges() == std::vector<Edge>{{0, 2}});

    // A topological ordering of an acyclic digraph leaves no backedges.
    Digraph path(3, {{0, 1}, {1, 2}});
    CHECK(backedge_graph(path, *topological_order(path)).edge_count() == 0);

    // A digon yields exactly one edge under either ordering.
    CHECK(backedge_graph(digon2(), Ordering({0, 1})).edges() == std::vector<Edge>{{0, 1}});
    CHECK(backedge_graph(digon2(), Ordering({1, 0})).edges() == std::vector<Edge>{{0, 1}});

    CHECK_THROWS_AS(backedge_graph(c3(), Ordering::identity(2)), GraphError);
}

TEST_CASE("reverse is an involution and digons are fixed") {
    Digraph r = reverse(c3());
    CHECK(r.has_arc(1, 0));
    CHECK(r.has_arc(2, 1));
    CHECK(r.has_arc(0, 2));
    CHECK(reverse(r) == c3());
    CHECK(reverse(digon2()) == digon2());
}

TEST_CASE("subdivision inserts one vertex per arc") {
    // C3 becomes the directed 6-cycle; mids are assigned in arc order.
    Digraph s = subdivide(c3());
    CHECK(s.n() == 6);
    CHECK(s.arc_count() == 6);
    std::vector<Arc> expected{{0, 3}, {1, 4}, {2, 5}, {3, 1}, {4, 2}, {5, 0}};
    CHECK(s.arcs() == expected);

    CHECK(subdivide(Digraph(4, {})) == Digraph(4, {}));

    Digraph sd = subdivide(digon2());
    CHECK(sd.n() == 4);
    CHECK(sd.arcs() == std::vector<Arc>{{0, 2}, {1, 3}, {2, 1}, {3, 0}});
    CHECK(!is_acyclic(sd));
}

TEST_CASE("symmetric closure replaces edges by digons") {
    CHECK(symmetric_closure(path_graph(2)) == digon2());
    Digraph c5sym = symmetric_closure(cycle_graph(5));
    CHECK(c5sym.arc_count() == 10);
    CHECK(symmetric_closure(UndirectedGraph(3, {})).arc_count() == 0);
}

TEST_CASE("degree statistics and digon counts") {
    for (Vertex v = 0; v < 3; ++v) {
        DegreeStats s = degree_stats(c3(), v);
        CHECK(s.out_deg == 1);
        CHECK(s.in_deg == 1);
        CHECK(s.d_max == 1);
        CHECK(s.d_min == 1);
        CHECK(s.dig == 0);
    }
    DegreeStats s = degree_stats(digon2(), 0);
    CHECK(s.dig == 1);
    CHECK(s.d_max == 1);

    Digraph k3sym = symmetric_closure(complete_graph(3));
    for (Vertex v = 0; v < 3; ++v) {
        DegreeStats t = degree_stats(k3sym, v);
        CHECK(t.out_deg == 2);
        CHECK(t.in_deg == 2);
        CHECK(t.dig == 2);
    }
    CHECK(delta_max(k3sym) == 2);
    CHECK(delta_min(k3sym) == 2);

    CHECK_THROWS_AS(degree_stats(c3(), 5), GraphError);
}

TEST_CASE("delta bounds on the transitive tournament") {
    Digraph tt3(3, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(delta_max(tt3) == 2);
    CHECK(delta_min(tt3) == 1);
    CHECK(delta_max(Digraph()) == 0);
    CHECK(delta_min(Digraph()) == 0);
}

TEST_CASE("acyclicity and topological order") {
    CHECK(!is_acyclic(c3()));
    CHECK(!topological_order(c3()).has_value());

    Digraph path(3, {{0, 1}, {1, 2}});
    auto ord = topological_order(path);
    REQUIRE(ord.has_value());
    CHECK(ord->perm() == std::vector<Vertex>{0, 1, 2});

    auto empty_ord = topological_order(Digraph(4, {}));
    REQUIRE(empty_ord.has_value());
    CHECK(empty_ord->perm() == std::vector<Vertex>{0, 1, 2, 3});
}

TEST_CASE("graph of an arc set collapses digons") {
    CHECK(graph_of_arcset(c3(), {{2, 0}}).edges() == std::vector<Edge>{{0, 2}});
    CHECK(graph_of_arcset(digon2(), {{0, 1}, {1, 0}}).edges() == std::vector<Edge>{{0, 1}});
    CHECK(graph_of_arcset(c3(), {}).edge_count() == 0);
    CHECK_THROWS_AS(graph_of_arcset(c3(), {{1, 0}}), GraphError);
}

TEST_CASE("feedback arc set recognition") {
    CHECK(is_fas(c3(), {{2, 0}}));
    CHECK(!is_fas(c3(), {}));
    CHECK(is_fas(digon2(), {{0, 1}}));
}

TEST_CASE("underlying graph, bipartiteness, degeneracy") {
    UndirectedGraph sub = underlying_graph(subdivide(c3()));
    CHECK(is_bipartite(sub));
    CHECK(degeneracy(sub) == 2);

    CHECK(!is_bipartite(complete_graph(3)));
    CHECK(degeneracy(complete_graph(3)) == 2);

    UndirectedGraph tree(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}});
    CHECK(is_bipartite(tree));
    CHECK(degeneracy(tree) == 1);
}

TEST_CASE("underlying graph merges digons") {
    CHECK(underlying_graph(digon2()).edges() == std::vector<Edge>{{0, 1}});
    CHECK(underlying_graph(c3()).edge_count() == 3);
}

TEST_CASE("1-subdivisions are bipartite and 2-degenerate") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Digraph d = gen_random(6, 0.4, seed);
        UndirectedGraph g = underlying_graph(subdivide(d));
        CHECK(is_bipartite(g));
        CHECK(degeneracy(g) <= 2);
    }
}

TEST_CASE("backedge graphs agree under reversal with the opposite ordering") {
    for (uint64_t seed = 0; seed < 40; ++seed) {
        Digraph d = gen_random(6, 0.45, seed);
        Digraph rev = reverse(d);
        SplitMix64 rng(seed + 1000);
        std::vector<Vertex> perm{0, 1, 2, 3, 4, 5};
        for (int i = 5; i > 0; --i)
            std::swap(perm[static_cast<size_t>(i)],
                      perm[rng.next_below(static_cast<uint64_t>(i) + 1)]);
        Ordering ord(perm);
        CHECK(backedge_graph(d, ord) == backedge_graph(rev, ord.reversed()));
    }
}

TEST_CASE("the symmetric closure reproduces its graph under every ordering") {
    UndirectedGraph g = cycle_graph(5);
    Digraph sym = symmetric_closure(g);
    std::vector<Vertex> perm{0, 1, 2, 3, 4};
    do {
        CHECK(backedge_graph(sym, Ordering(perm)) == g);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("a FAS dominates the backedges of a topological order of the rest") {
    long checked = 0;
    for (uint64_t seed = 0; seed < 120; ++seed) {
        Digraph d = gen_random(6, 0.3, seed);
        // Candidate F: every arc independently with probability 1/2.
        SplitMix64 rng(seed * 7 + 3);
        std::vector<Arc> f;
        for (const Arc& a : d.arcs())
            if (rng.next() & 1ULL) f.push_back(a);
        if (!is_fas(d, f)) continue;
        ++checked;
        auto topo = topological_order(remove_arcs(d, f));
        REQUIRE(topo.has_value());
        UndirectedGraph fg = graph_of_arcset(d, f);
        for (const Edge& e : backedge_graph(d, *topo).edges()) CHECK(fg.has_edge(e.u, e.v));
    }
    CHECK(checked > 20);
}

TEST_CASE("arc count equals both degree sums") {
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Digraph d = gen_random(7, 0.5, seed);
        int out_sum = 0, in_sum = 0;
        for (Vertex v = 0; v < d.n(); ++v) {
            out_sum += d.out_degree(v);
            in_sum += d.in_degree(v);
        }
        CHECK(out_sum == d.arc_count());
        CHECK(in_sum == d.arc_count());
    }
}

TEST_CASE("empty digraph is legal everywhere") {
    Digraph d;
    CHECK(d.n() == 0);
    CHECK(is_acyclic(d));
    CHECK(backedge_graph(d, Ordering()).n() == 0);
    CHECK(underlying_graph(d).n() == 0);
    CHECK(degeneracy(UndirectedGraph()) == 0);
}

#include "doctest.h"

#include <algorithm>
#include <climits>
#include <numeric>

#include "backedge/generators.hpp"
#include "backedge/ordering_costs.hpp"
#include "backedge/rng.hpp"

using namespace backedge;

namespace {

Digraph c3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }
Digraph digon2() { return Digraph(2, {{0, 1}, {1, 0}}); }

// Test-side oracles: plain minimization over all orderings of the direct
// cost evaluation.
template <typename CostFn>
int min_over_orderings(int n, CostFn&& cost) {
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    int best = INT_MAX;
    do {
        best = std::min(best, cost(Ordering(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Ordering random_ordering(int n, SplitMix64& rng) {
    std::vector<Vertex> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<size_t>(i)],
                  perm[rng.next_below(static_cast<uint64_t>(i) + 1)]);
    return Ordering(perm);
}

} // namespace

TEST_CASE("arc length is the position distance") {
    Ordering ord({0, 1, 2});
    CHECK(arc_length(ord, 0, 1) == 1);
    CHECK(arc_length(ord, 0, 2) == 2);
    CHECK(arc_length(ord, 2, 1) == 1);
    CHECK_THROWS_AS(arc_length(ord, 1, 1), GraphError);
}

TEST_CASE("total backedge length equals the prefix-cut sum") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Digraph d = gen_random(n, 0.5, seed * 31 + 17);
        SplitMix64 rng(seed);
        Ordering ord = random_ordering(n, rng);
        CHECK(backedge_length_sum(d, ord) == prefix_cut_sum(d, ord));
    }
}

TEST_CASE("diOLA on known digraphs") {
    CostReport r = di_ola(c3());
    CHECK(r.value == 2);
    CHECK(backedge_length_sum(c3(), r.witness) == 2);

    CHECK(di_ola(Digraph(4, {{0, 1}, {1, 2}, {0, 3}})).value == 0);
    CHECK(di_ola(digon2()).value == 1);
    CHECK(di_ola(Digraph()).value == 0);
    CHECK_THROWS_AS(di_ola(gen_random(25, 0.01, 5)), GuardError);
}

TEST_CASE("diOLA subset DP equals the brute force") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Digraph d = gen_random(n, 0.5, seed * 37 + 23);
        int brute = min_over_orderings(n, [&](const Ordering& o) {
            return backedge_length_sum(d, o);
        });
        CostReport dp = di_ola(d);
        CHECK(dp.value == brute);
        CHECK(backedge_length_sum(d, dp.witness) == dp.value);
    }
}

TEST_CASE("undirected OLA on known graphs") {
    CHECK(ola_undirected(path_graph(2)).value == 1);
    CHECK(ola_undirected(path_graph(3)).value == 2);
    CHECK(ola_undirected(complete_graph(3)).value == 4);

    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        UndirectedGraph g = underlying_graph(gen_random(n, 0.5, seed * 41 + 29));
        int brute = min_over_orderings(n, [&](const Ordering& o) {
            return edge_length_sum(g, o);
        });
        CostReport dp = ola_undirected(g);
        CHECK(dp.value == brute);
        CHECK(edge_length_sum(g, dp.witness) == dp.value);
    }
}

TEST_CASE("double minimization never exceeds diOLA and is strictly better on C3") {
    CostReport r = ola_vec(c3());
    CHECK(r.value == 1);
    REQUIRE(r.inner.has_value());
    CHECK(edge_length_sum(backedge_graph(c3(), r.witness), *r.inner) == 1);
    CHECK(di_ola(c3()).value == 2);

    CHECK(ola_vec(Digraph(3, {{0, 1}, {1, 2}})).value == 0);
    CHECK(ola_vec(symmetric_closure(path_graph(2))).value == 1);
    CHECK_THROWS_AS(ola_vec(gen_random(9, 0.1, 5)), GuardError);

    for (uint64_t seed = 0; seed < 30; ++seed) {
        int n = 1 + static_cast<int>(seed % 7);
        Digraph d = gen_random(n, 0.45, seed * 43 + 31);
        CHECK(ola_vec(d).value <= di_ola(d).value);
    }
}

TEST_CASE("directed cutwidth on known digraphs") {
    CHECK(directed_cutwidth(c3()).value == 1);
    CHECK(directed_cutwidth(Digraph(3, {{0, 1}, {1, 2}})).value == 0);

    // Two vertex-disjoint triangles can be laid out consecutively.
    Digraph two(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK(directed_cutwidth(two).value == 1);

    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Digraph d = gen_random(n, 0.5, seed * 47 + 37);
        int brute = min_over_orderings(n, [&](const Ordering& o) {
            return max_prefix_cut(d, o);
        });
        CostReport dp = directed_cutwidth(d);
        CHECK(dp.value == brute);
        CHECK(max_prefix_cut(d, dp.witness) == dp.value);
        CHECK((dp.value == 0) == is_acyclic(d));
    }
}

TEST_CASE("directed bandwidth on known digraphs") {
    // Under [0,2,1] the triangle has two backward arcs of length 1 each,
    // so its directed bandwidth is 1 (unlike the bandwidth 2 of its
    // underlying triangle).
    CHECK(directed_bandwidth(c3()).value == 1);
    CHECK(directed_bandwidth(c3()).witness.perm() == std::vector<Vertex>{0, 2, 1});
    CHECK(directed_bandwidth(Digraph(3, {{0, 1}, {1, 2}})).value == 0);
    CHECK(directed_bandwidth(digon2()).value == 1);

    for (uint64_t seed = 0; seed < 40; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Digraph d = gen_random(n, 0.5, seed * 53 + 41);
        int brute = min_over_orderings(n, [&](const Ordering& o) {
            return max_backedge_length(d, o);
        });
        CostReport bb = directed_bandwidth(d);
        CHECK(bb.value == brute);
        CHECK(max_backedge_length(d, bb.witness) == bb.value);
        CHECK((bb.value >= 1) == !is_acyclic(d));
    }
}

TEST_CASE("witnesses are the lexicographically smallest optimal orderings") {
    // First permutation (in lex enumeration) achieving the optimum.
    auto lex_witness = [](int n, auto&& cost) {
        std::vector<Vertex> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        int best = INT_MAX;
        std::vector<Vertex> witness;
        do {
            int v = cost(Ordering(perm));
            if (v < best) {
                best = v;
                witness = perm;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return witness;
    };

    for (uint64_t seed = 0; seed < 150; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Digraph d = gen_random(n, 0.5, seed * 97 + 7);
        CHECK(di_ola(d).witness.perm() == lex_witness(n, [&](const Ordering& o) {
                  return backedge_length_sum(d, o);
              }));
        CHECK(directed_cutwidth(d).witness.perm() == lex_witness(n, [&](const Ordering& o) {
                  return max_prefix_cut(d, o);
              }));
        CHECK(directed_bandwidth(d).witness.perm() == lex_witness(n, [&](const Ordering& o) {
                  return max_backedge_length(d, o);
              }));
    }
}

TEST_CASE("ordering costs are invariant under arc reversal") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        int n = 1 + static_cast<int>(seed % 6);
        Digraph d = gen_random(n, 0.5, seed * 59 + 43);
        Digraph rev = reverse(d);
        CHECK(di_ola(rev).value == di_ola(d).value);
        CHECK(directed_cutwidth(rev).value == directed_cutwidth(d).value);
        CHECK(directed_bandwidth(rev).value == directed_bandwidth(d).value);
    }
}

TEST_CASE("symmetric digraphs reproduce the undirected cost parameters") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        int n = 2 + static_cast<int>(seed % 5);
        UndirectedGraph g = underlying_graph(gen_random(n, 0.5, seed * 61 + 47));
        Digraph sym = symmetric_closure(g);

        int ola = min_over_orderings(n, [&](const Ordering& o) {
            return edge_length_sum(g, o);
        });
        int cw = min_over_orderings(n, [&](const Ordering& o) {
            int worst = 0;
            for (int i = 0; i + 1 < n; ++i) {
                int crossing = 0;
                for (const Edge& e : g.edges()) {
                    int a = std::min(o.position(e.u), o.position(e.v));
                    int b = std::max(o.position(e.u), o.position(e.v));
                    if (a <= i && i < b) ++crossing;
                }
                worst = std::max(worst, crossing);
            }
            return worst;
        });
        int bw = min_over_orderings(n, [&](const Ordering& o) {
            int worst = 0;
            for (const Edge& e : g.edges())
                worst = std::max(worst, std::abs(o.position(e.u) - o.position(e.v)));
            return worst;
        });

        CHECK(di_ola(sym).value == ola);
        CHECK(ola_vec(sym).value == ola);
        CHECK(directed_cutwidth(sym).value == cw);
        CHECK(directed_bandwidth(sym).value == bw);
    }
}

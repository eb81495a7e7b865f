#include "doctest.h"

#include <algorithm>
#include <string>

#include "backedge/reduction.hpp"
#include "backedge/generators.hpp"
#include "backedge/rng.hpp"
#include "backedge/width.hpp"

using namespace backedge;

namespace {

CnfFormula one_clause_x() {
    // (x or x or x)
    return CnfFormula(1, {{Literal{0, false}, Literal{0, false}, Literal{0, false}}});
}

CnfFormula unsat_pair() {
    // (x or x or x) and (!x or !x or !x)
    return CnfFormula(1, {{Literal{0, false}, Literal{0, false}, Literal{0, false}},
                          {Literal{0, true}, Literal{0, true}, Literal{0, true}}});
}

CnfFormula random_formula(int vars, int clauses, SplitMix64& rng) {
    std::vector<std::array<Literal, 3>> cls;
    while (static_cast<int>(cls.size()) < clauses) {
        std::array<Literal, 3> cl;
        for (int i = 0; i < 3; ++i)
            cl[static_cast<size_t>(i)] =
                Literal{static_cast<int>(rng.next_below(static_cast<uint64_t>(vars))),
                        (rng.next() & 1ULL) != 0};
        bool tautological = false;
        for (int a = 0; a < 3 && !tautological; ++a)
            for (int b = a + 1; b < 3; ++b)
                if (complementary(cl[static_cast<size_t>(a)], cl[static_cast<size_t>(b)])) {
                    tautological = true;
                    break;
                }
        if (!tautological) cls.push_back(cl);
    }
    return CnfFormula(vars, std::move(cls));
}

bool is_transfer_mid(const ReductionOutput& r, Vertex v) {
    return r.roles[static_cast<size_t>(v)].rfind("tr:", 0) == 0;
}

} // namespace

TEST_CASE("formula validation") {
    CHECK_THROWS_AS(CnfFormula(1, {{Literal{0, false}, Literal{0, true}, Literal{0, false}}}),
                    InstanceError);
    CHECK_THROWS_AS(CnfFormula(1, {{Literal{1, false}, Literal{0, false}, Literal{0, false}}}),
                    InstanceError);

    Valuation nu;
    nu.value = {true};
    CHECK(one_clause_x().satisfied_by(nu));
    nu.value = {false};
    CHECK(!one_clause_x().satisfied_by(nu));
}

TEST_CASE("exhaustive SAT oracle returns the canonical smallest assignment") {
    auto nu = sat_bruteforce(one_clause_x());
    REQUIRE(nu.has_value());
    CHECK(nu->value == std::vector<bool>{true});

    CHECK(!sat_bruteforce(unsat_pair()).has_value());

    CnfFormula xyz(3, {{Literal{0, false}, Literal{1, false}, Literal{2, false}}});
    auto first = sat_bruteforce(xyz);
    REQUIRE(first.has_value());
    CHECK(first->value == std::vector<bool>{true, false, false});

    CnfFormula wide(21, {{Literal{0, false}, Literal{1, false}, Literal{2, false}}});
    CHECK_THROWS_AS(sat_bruteforce(wide), GuardError);
}

TEST_CASE("transfer digraphs have p disjoint length-2 paths") {
    TransferDigraph t1 = transfer_digraph(1);
    CHECK(t1.digraph.n() == 3);
    CHECK(t1.digraph.arc_count() == 2);
    CHECK(t1.digraph.has_arc(t1.s, t1.mids[0]));
    CHECK(t1.digraph.has_arc(t1.mids[0], t1.t));

    TransferDigraph t2 = transfer_digraph(2);
    CHECK(t2.digraph.n() == 4);
    CHECK(t2.digraph.arc_count() == 4);

    TransferDigraph t3 = transfer_digraph(3);
    CHECK(t3.digraph.n() == 5);
    CHECK(t3.digraph.arc_count() == 6);
    CHECK(is_acyclic(t3.digraph));

    CHECK_THROWS_AS(transfer_digraph(0), InstanceError);
}

TEST_CASE("clause gadget sizes follow the construction") {
    ReductionOutput g1 = clause_gadget(1);
    CHECK(g1.digraph.n() == 33);
    CHECK(g1.digraph.arc_count() == 54);
    CHECK(!is_acyclic(g1.digraph));

    ReductionOutput g2 = clause_gadget(2);
    CHECK(g2.digraph.n() == 51);

    // The six named cycle arcs really form the directed cycle.
    for (int e = 0; e < 6; ++e) {
        Arc a = g1.cycle_arcs[0][static_cast<size_t>(e)];
        CHECK(g1.digraph.has_arc(a.tail, a.head));
        Arc next = g1.cycle_arcs[0][static_cast<size_t>((e + 1) % 6)];
        CHECK(a.head == next.tail);
    }

    CHECK_THROWS_AS(clause_gadget(0), InstanceError);
}

TEST_CASE("reduction counts match the closed forms") {
    CHECK(build_reduction(one_clause_x(), 1).digraph.n() == 33);

    ReductionOutput r = build_reduction(unsat_pair(), 1);
    CHECK(r.digraph.n() == 120);
    CHECK(r.digraph.arc_count() == 216);
    CHECK(reduction_vertex_count(unsat_pair(), 1) == 120);
    CHECK(reduction_arc_count(unsat_pair(), 1) == 216);

    for (int k = 1; k <= 3; ++k) {
        SplitMix64 rng(static_cast<uint64_t>(k) * 100 + 7);
        for (int m = 1; m <= 3; ++m) {
            CnfFormula phi = random_formula(3, m, rng);
            ReductionOutput out = build_reduction(phi, k);
            CHECK(out.digraph.n() == reduction_vertex_count(phi, k));
            CHECK(out.digraph.arc_count() == reduction_arc_count(phi, k));
        }
    }

    CHECK_THROWS_AS(build_reduction(one_clause_x(), 0), InstanceError);
}

TEST_CASE("reduction outputs are labeled 1-subdivisions") {
    SplitMix64 rng(99);
    for (int round = 0; round < 6; ++round) {
        CnfFormula phi = random_formula(3, 1 + round % 3, rng);
        ReductionOutput r = build_reduction(phi, 1 + round % 2);
        CHECK(static_cast<int>(r.roles.size()) == r.digraph.n());

        UndirectedGraph under = underlying_graph(r.digraph);
        CHECK(is_bipartite(under));
        CHECK(degeneracy(under) <= 2);

        for (Vertex v = 0; v < r.digraph.n(); ++v) {
            if (!is_transfer_mid(r, v)) continue;
            CHECK(r.digraph.out_degree(v) == 1);
            CHECK(r.digraph.in_degree(v) == 1);
            CHECK(!is_transfer_mid(r, r.digraph.out_neighbors(v)[0]));
            CHECK(!is_transfer_mid(r, r.digraph.in_neighbors(v)[0]));
        }
    }

    ReductionOutput r = build_reduction(one_clause_x(), 1);
    CHECK(r.roles[static_cast<size_t>(r.lit[0][0])] == "l:j=1,i=1");
    CHECK(r.roles[static_cast<size_t>(r.lit_tilde[0][2])] == "l~:j=1,i=3");
    CHECK(r.roles[static_cast<size_t>(r.cyc[0][1])] == "c:j=1,i=2");
}

TEST_CASE("satisfying valuations produce verified width-k witnesses") {
    ReductionOutput r = build_reduction(one_clause_x(), 1);
    Valuation top;
    top.value = {true};
    std::vector<Arc> fas = witness_fas_from_valuation(r, top);
    CHECK(fas.size() == 5);
    CHECK(is_fas(r.digraph, fas));
    CHECK(max_degree(graph_of_arcset(r.digraph, fas)) == 1);

    Valuation bottom;
    bottom.value = {false};
    CHECK_THROWS_AS(witness_fas_from_valuation(r, bottom), InstanceError);

    // Extraction recovers the forcing literal.
    Valuation back = valuation_from_fas(r, fas);
    CHECK(back.value == std::vector<bool>{true});
}

TEST_CASE("witness round-trip on random satisfiable formulas") {
    SplitMix64 rng(4242);
    int built = 0;
    while (built < 12) {
        CnfFormula phi = random_formula(1 + static_cast<int>(rng.next_below(4)),
                                        1 + static_cast<int>(rng.next_below(4)), rng);
        auto nu = sat_bruteforce(phi);
        if (!nu) continue;
        ++built;
        for (int k = 1; k <= 2; ++k) {
            ReductionOutput r = build_reduction(phi, k);
            std::vector<Arc> fas = witness_fas_from_valuation(r, *nu);
            CHECK(is_fas(r.digraph, fas));
            CHECK(max_degree(graph_of_arcset(r.digraph, fas)) == k);
            Valuation extracted = valuation_from_fas(r, fas);
            CHECK(phi.satisfied_by(extracted));
        }
    }
}

TEST_CASE("valuations extract from search-found FASes, not only constructed ones") {
    // The converse direction must work for any bounded FAS, including ones
    // found by the branch-and-bound rather than built from a valuation.
    SplitMix64 rng(31337);
    int built = 0;
    while (built < 6) {
        CnfFormula phi = random_formula(1 + static_cast<int>(rng.next_below(3)),
                                        1 + static_cast<int>(rng.next_below(2)), rng);
        if (!sat_bruteforce(phi)) continue;
        ++built;
        ReductionOutput r = build_reduction(phi, 1);
        auto fas = degreewidth_via_fas(r.digraph, 1);
        REQUIRE(fas.has_value());
        Valuation extracted = valuation_from_fas(r, *fas);
        CHECK(phi.satisfied_by(extracted));
    }
}

TEST_CASE("valuation extraction rejects arc sets that are not bounded FASes") {
    ReductionOutput r = build_reduction(one_clause_x(), 1);
    CHECK_THROWS_AS(valuation_from_fas(r, {}), InstanceError);

    // The full arc set is a FAS but wildly exceeds the degree bound.
    CHECK_THROWS_AS(valuation_from_fas(r, r.digraph.arcs()), InstanceError);
}

TEST_CASE("the canonical unsatisfiable instance admits no width-1 FAS") {
    ReductionOutput r = build_reduction(unsat_pair(), 1);
    CHECK(!degreewidth_via_fas(r.digraph, 1).has_value());
}

TEST_CASE("transfer degree bound checked exhaustively") {
    TransferBoundReport p2 = transfer_degree_bound_check(1, 2);
    CHECK(p2.exhaustive);
    CHECK(p2.subsets_checked == 16);
    CHECK(p2.ok());

    TransferBoundReport p3 = transfer_degree_bound_check(1, 3);
    CHECK(p3.subsets_checked == 64);
    CHECK(p3.ok());

    CHECK(transfer_degree_bound_check(2, 4).ok());
    CHECK(transfer_degree_bound_check(2, 5).ok());

    for (int p = 6; p <= 8; ++p) {
        TransferBoundReport sampled = transfer_degree_bound_check(p / 2, p, 10000, 77);
        CHECK(!sampled.exhaustive);
        CHECK(sampled.subsets_checked == 10000);
        CHECK(sampled.ok());
    }

    CHECK_THROWS_AS(transfer_degree_bound_check(1, 4), InstanceError);
}

TEST_CASE("dicolourability gadget has width exactly k") {
    BrooksGadget single = brooks_gadget(Digraph(1, {}), 2);
    CHECK(single.digraph.n() == 3);
    CHECK(delta_min(single.digraph) == 2);

    CHECK_THROWS_AS(brooks_gadget(Digraph(1, {}), 1), InstanceError);

    for (uint64_t seed = 0; seed < 8; ++seed) {
        int n = 1 + static_cast<int>(seed % 4);
        Digraph d = gen_random(n, 0.5, seed * 67 + 13);
        for (int k = 2; k <= 3; ++k) {
            BrooksGadget g = brooks_gadget(d, k);
            CHECK(g.digraph.n() == d.n() * (k + 1));
            CHECK(delta_min(g.digraph) == k);
            CHECK(dig_lower_bound(g.digraph) == k);
            CHECK(degreewidth_dp(g.digraph).value == k);
        }
    }

    // k-dicolourability transfers between the digraph and its gadget.
    for (uint64_t seed = 0; seed < 6; ++seed) {
        int n = 1 + static_cast<int>(seed % 4);
        Digraph d = gen_random(n, 0.6, seed * 71 + 19);
        BrooksGadget g = brooks_gadget(d, 2);
        CHECK((dichromatic_number(d) <= 2) == (dichromatic_number(g.digraph) <= 2));
    }
}

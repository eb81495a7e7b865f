#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "backedge/digraph.hpp"
#include "backedge/width.hpp"

namespace backedge {

struct Literal {
    int var = 0;
    bool negated = false;

    friend bool operator==(const Literal& a, const Literal& b) {
        return a.var == b.var && a.negated == b.negated;
    }
    // x and !x.
    friend bool complementary(const Literal& a, const Literal& b) {
        return a.var == b.var && a.negated != b.negated;
    }
};

struct Valuation {
    std::vector<bool> value; // value[var]

    bool satisfies(const Literal& l) const {
        return value[static_cast<size_t>(l.var)] != l.negated;
    }
};

// 3-CNF with exactly three literals per clause; repeats inside a clause are
// allowed, tautological clauses (x and !x together) are rejected.
class CnfFormula {
public:
    CnfFormula() = default;
    CnfFormula(int num_vars, std::vector<std::array<Literal, 3>> clauses);

    int num_vars() const { return num_vars_; }
    int num_clauses() const { return static_cast<int>(clauses_.size()); }
    const std::array<Literal, 3>& clause(int j) const {
        return clauses_[static_cast<size_t>(j)];
    }
    bool satisfied_by(const Valuation& nu) const;

private:
    int num_vars_ = 0;
    std::vector<std::array<Literal, 3>> clauses_;
};

// Exhaustive SAT oracle; assignments tried in increasing order of the bit
// pattern (var 0 = least significant), first hit returned.
std::optional<Valuation> sat_bruteforce(const CnfFormula& phi, const SolverGuards& guards = {});

// p internally disjoint directed paths of length 2 from s to t.
// Layout: s = 0, mids = 1..p, t = p+1.
struct TransferDigraph {
    Digraph digraph;
    Vertex s = 0;
    Vertex t = 0;
    std::vector<Vertex> mids;
};

TransferDigraph transfer_digraph(int p);

// One transfer inside a larger digraph; mids[i] realizes path i+1.
struct Transfer {
    Vertex src = 0;
    Vertex dst = 0;
    std::vector<Vertex> mids;
};

// The digraph associated to a 3-CNF for the width-k decision problem,
// with every vertex labeled by its gadget role.
struct ReductionOutput {
    Digraph digraph;
    int k = 0;
    CnfFormula formula;

    // Named vertices, indexed [clause][position], 0-based.
    std::vector<std::array<Vertex, 3>> lit;       // l(j,i)
    std::vector<std::array<Vertex, 3>> lit_tilde; // l~(j,i)
    std::vector<std::array<Vertex, 3>> cyc;       // c(j,i)

    // Per clause, the six arcs of the cycle through the l~ and c vertices:
    // (l~1,c1),(c1,l~2),(l~2,c2),(c2,l~3),(l~3,c3),(c3,l~1).
    std::vector<std::array<Arc, 6>> cycle_arcs;

    // Size-2k transfers l(j,i) -> l~(j,i).
    std::vector<std::array<Transfer, 3>> literal_transfers;

    // Size-(2k+1) transfers: the six intra-clause links l~(j,i) -> l(j,i')
    // and one link per ordered occurrence of complementary literals across
    // clauses.
    std::vector<Transfer> link_transfers;

    // Stable per-vertex role strings (1-based indices).
    std::vector<std::string> roles;
};

// Clause gadget alone: the reduction of a single clause on three distinct
// fresh variables (no cross links arise).
ReductionOutput clause_gadget(int k);

ReductionOutput build_reduction(const CnfFormula& phi, int k);

// Expected sizes from the construction, usable without building.
long reduction_vertex_count(const CnfFormula& phi, int k);
long reduction_arc_count(const CnfFormula& phi, int k);

// The proof-side witness: a FAS whose collapsed graph has maximum degree
// exactly k, built from a satisfying valuation. Throws InstanceError when
// nu does not satisfy the formula.
std::vector<Arc> witness_fas_from_valuation(const ReductionOutput& r, const Valuation& nu);

// The converse direction: extract a satisfying valuation from any FAS F
// with max degree of D[F] at most k. Unforced variables default to false.
Valuation valuation_from_fas(const ReductionOutput& r, const std::vector<Arc>& fas);

struct TransferBoundReport {
    int p = 0;
    int k = 0;
    bool exhaustive = true;
    long subsets_checked = 0;
    long disconnecting = 0;
    long bound_violations = 0;    // disconnecting F with max degree < ceil(p/2)
    long equality_violations = 0; // even p only: (max degree == k) vs d(s)=d(t)=k mismatch

    bool ok() const { return bound_violations == 0 && equality_violations == 0; }
};

// Checks the transfer-digraph degree bound over all (or sampled) arc
// subsets of T_p. Requires p == 2k or p == 2k+1.
TransferBoundReport transfer_degree_bound_check(int k, int p, long samples = 0, uint64_t seed = 0);

// Dicolourability-preserving gadget: k+1 vertices per original vertex,
// two overlapping symmetric cliques joined by (v-, v+), plus one arc
// (u+, v-) per original arc. The result has degreewidth exactly k.
struct BrooksGadget {
    Digraph digraph;
    int k = 0;
    std::vector<std::string> roles;

    Vertex minus_of(Vertex v) const { return v * (k + 1); }
    Vertex plus_of(Vertex v) const { return v * (k + 1) + 1; }
    Vertex mid_of(Vertex v, int t) const { return v * (k + 1) + 1 + t; } // t in 1..k-1
};

BrooksGadget brooks_gadget(const Digraph& d, int k);

} // namespace backedge

#pragma once

#include <cstdint>

#include "backedge/digraph.hpp"

namespace backedge {

// Deterministic instance generators; a fixed seed yields the same digraph
// on every platform (see rng.hpp).

// Every ordered pair (u, v), u != v, becomes an arc independently with
// probability p.
Digraph gen_random(int n, double p, uint64_t seed);

// Exactly one arc per unordered pair, direction by coin flip.
Digraph gen_tournament(int n, uint64_t seed);

// d+(v) = d-(v) = k for every vertex: k random fixed-point-free
// permutations with pairwise distinct arcs, retried as a batch; falls back
// to rotations when the random search stalls.
Digraph gen_kregular(int n, int k, uint64_t seed);

enum class SymmetricFamily { Complete, Cycle, Path, Star };

UndirectedGraph complete_graph(int n);
UndirectedGraph cycle_graph(int n);
UndirectedGraph path_graph(int n);
UndirectedGraph star_graph(int n);

// Symmetric closure of the chosen undirected family.
Digraph gen_symmetric(SymmetricFamily family, int n);

} // namespace backedge

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "backedge/digraph.hpp"

namespace backedge {

// Size guards for the exact solvers. Exceeding a guard throws GuardError,
// never silently truncates. Hard memory cap: subset-DP tables are 2^n
// entries, so dp_n above 26 is rejected at the CLI.
struct SolverGuards {
    int brute_n = 10;          // factorial enumeration of orderings
    int dp_n = 24;             // subset DPs (degreewidth, diOLA, cutwidth)
    int dichromatic_n = 16;    // acyclic-partition DP
    int minimal_fas_arcs = 20; // minimal-FAS enumeration, counts cycle arcs
    int ola_vec_n = 8;         // double minimization over orderings
    int sat_vars = 20;         // SAT brute force
};

struct WidthResult {
    int value = 0;
    Ordering witness; // lexicographically smallest optimal ordering
    std::string method;
};

// Undirected parameters usable as the minimized quantity over backedge
// graphs; all four are monotone under subgraphs.
enum class GraphParameter { MaxDegree, ChromaticNumber, CliqueNumber, VertexCover };

const char* parameter_name(GraphParameter p);

// Exact undirected solvers (desk scale).
int max_degree(const UndirectedGraph& g);
int chromatic_number_exact(const UndirectedGraph& g);
// Convention: 1 on a nonempty edgeless graph, 0 on the empty graph.
int clique_number_exact(const UndirectedGraph& g);
int vertex_cover_number_exact(const UndirectedGraph& g);
int apply_parameter(const UndirectedGraph& g, GraphParameter p);

// First-fit along ord; at most max_degree(g) + 1 colors.
int greedy_color_count(const UndirectedGraph& g, const Ordering& ord);

// ---- degreewidth ----

// Minimum over all n! orderings of the maximum backedge degree.
WidthResult degreewidth_bruteforce(const Digraph& d, const SolverGuards& guards = {});

// Subset DP over prefix sets; agrees with the brute force everywhere.
WidthResult degreewidth_dp(const Digraph& d, const SolverGuards& guards = {});

// Backedge degree of u when placed directly after the prefix set
// (bitmask over vertices): |N+(u) & prefix| + |N-(u) & ~(prefix|u)|.
// This is the placement identity the DP rests on; exposed for its
// validation test.
int placement_degree(const Digraph& d, Vertex u, uint32_t prefix_mask);

// Decision problem: degreewidth <= k? Dispatches to the DP when n fits,
// otherwise to the FAS search.
bool k_degreewidth_decide(const Digraph& d, int k, const SolverGuards& guards = {});

// Complete branch-and-bound over directed cycles: returns a FAS F with
// max degree of D[F] at most k iff one exists. No size guard; worst case
// exponential.
std::optional<std::vector<Arc>> degreewidth_via_fas(const Digraph& d, int k);

// Sort by nondecreasing in-degree, ties by vertex index. Upper bound on
// the degreewidth; 3-approximation on tournaments.
WidthResult indeg_ordering_heuristic(const Digraph& d);

// ---- other backedge parameters ----

// Minimum number of parts in a partition of V into acyclic-inducing sets.
int dichromatic_number(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of chi(backedge graph); equals dichromatic_number.
int chi_vec_via_orderings(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of omega(backedge graph).
int directed_clique_number(const Digraph& d, const SolverGuards& guards = {});

// Minimum vertex set whose removal leaves the digraph acyclic;
// branch and bound on shortest directed cycles.
int fvn(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of tau(backedge graph); equals fvn.
int tau_vec_via_orderings(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of the selected parameter of the backedge graph.
int gamma_vec_bruteforce(const Digraph& d, GraphParameter sel,
                         const SolverGuards& guards = {});

// Same value through the minimal-FAS route: min over inclusion-minimal
// feedback arc sets F of sel(D[F]).
int gamma_via_minimal_fas(const Digraph& d, GraphParameter sel,
                          const SolverGuards& guards = {});

// All inclusion-minimal feedback arc sets, each sorted, in lexicographic
// order.
std::vector<std::vector<Arc>> minimal_feedback_arc_sets(const Digraph& d,
                                                        const SolverGuards& guards = {});

// max over v of dig(v); lower bound on the degreewidth.
int dig_lower_bound(const Digraph& d);

// ---- tightness scan ----

// For a digraph with degreewidth k and dichromatic number k+1, every
// width-optimal ordering must leave a backedge component that is an odd
// cycle (k = 2) or K_{k+1} (k != 2). Lists orderings violating this.
struct BrooksScanReport {
    int k = 0;
    int chi_a = 0;
    bool conditional_holds_vacuously = false; // chi_a != k+1
    long orderings_checked = 0;
    std::vector<Ordering> violations;
};

BrooksScanReport brooks_tightness_scan(const Digraph& d, int k,
                                       const SolverGuards& guards = {});

} // namespace backedge

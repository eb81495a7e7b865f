#pragma once

#include <optional>
#include <string>

#include "backedge/digraph.hpp"
#include "backedge/width.hpp"

namespace backedge {

struct CostReport {
    int value = 0;
    Ordering witness; // lexicographically smallest optimal ordering
    std::optional<Ordering> inner; // second-stage arrangement (ola_vec only)
    std::string method;
};

// |position(u) - position(v)|. Throws on equal endpoints.
int arc_length(const Ordering& ord, Vertex u, Vertex v);

// ---- direct cost evaluators (definition route) ----

// Sum of lengths of the backward arcs of d under ord.
int backedge_length_sum(const Digraph& d, const Ordering& ord);

// Maximum backward-arc length; 0 when none.
int max_backedge_length(const Digraph& d, const Ordering& ord);

// Number of backward arcs crossing the cut after position i (0-based,
// i in 0..n-2), i.e. arcs from a later to an earlier vertex.
int prefix_cut(const Digraph& d, const Ordering& ord, int i);
int prefix_cut_sum(const Digraph& d, const Ordering& ord);
int max_prefix_cut(const Digraph& d, const Ordering& ord);

// Sum of edge lengths of g under ord.
int edge_length_sum(const UndirectedGraph& g, const Ordering& ord);

// ---- optimizers ----

// min over orderings of the summed backward-arc lengths. Subset DP over
// prefix cuts; equals the direct sum on the witness.
CostReport di_ola(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of the summed edge lengths.
CostReport ola_undirected(const UndirectedGraph& g, const SolverGuards& guards = {});

// min over orderings of ola_undirected(backedge graph): both minimizations
// are free, so the value never exceeds di_ola.
CostReport ola_vec(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of the maximum prefix cut.
CostReport directed_cutwidth(const Digraph& d, const SolverGuards& guards = {});

// min over orderings of the maximum backward-arc length.
CostReport directed_bandwidth(const Digraph& d, const SolverGuards& guards = {});

} // namespace backedge

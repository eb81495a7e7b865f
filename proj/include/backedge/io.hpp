#pragma once

#include <iosfwd>
#include <string>

#include "backedge/digraph.hpp"
#include "backedge/reduction.hpp"

namespace backedge {

// Edge-list text format: optional '#' comment lines, then a line "n m",
// then m lines "u v" (0-indexed). Construction errors (loops, duplicates,
// out-of-range endpoints) propagate as GraphError.
Digraph parse_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Digraph& d);
void write_edge_list_file(const std::string& path, const Digraph& d);

// DOT export; with an ordering, vertices carry their position and the
// backward arcs are highlighted.
std::string to_dot(const Digraph& d, const Ordering* highlight = nullptr);

// DIMACS CNF ("p cnf <vars> <clauses>", clauses 0-terminated, exactly
// three literals each). Syntax problems raise ParseError; tautological
// clauses raise InstanceError via CnfFormula.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);

} // namespace backedge

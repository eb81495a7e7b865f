#pragma once

#include <stdexcept>
#include <string>

namespace backedge {

// Invalid graph construction: loops, duplicate arcs, endpoints out of range.
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

// An exact solver was asked to run above its configured size guard.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input file (edge list, DIMACS).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid input that is semantically unusable
// (tautological clause, infeasible generator parameters, ...).
struct InstanceError : std::runtime_error {
    explicit InstanceError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace backedge

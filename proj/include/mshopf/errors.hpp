#pragma once

#include <stdexcept>
#include <string>

namespace mshopf {

// Malformed incidence structure or violated structural invariant.
struct GraphError : std::runtime_error {
    explicit GraphError(const std::string& m) : std::runtime_error(m) {}
};

// Connectivity required but input disconnected; flagged distinctly from
// other malformations per the graph-core contract.
struct DisconnectedError : GraphError {
    explicit DisconnectedError(const std::string& m) : GraphError(m) {}
};

// Operation precondition violated (arity, scale interface, improper input).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error(m) {}
};

// Renormalization requested on a graph containing a two-point subgraph;
// the biped sector is deliberately unsupported.
struct BipedSectorError : PreconditionError {
    explicit BipedSectorError(const std::string& m) : PreconditionError(m) {}
};

// Input file failed to parse under the graph-spec grammar.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

} // namespace mshopf

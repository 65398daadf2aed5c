#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csrpath/graph.hpp"

namespace csrpath {

// Reference implementations used to check the engine. They share no code
// with the relaxation kernels: distances are kept in 128-bit arithmetic and
// only clamped to kInf on output.

/// Textbook Dijkstra over a binary min-heap with a settled set.
std::vector<Cost> dijkstra_reference(const CsrGraph& graph, VertexId source);

inline constexpr std::uint64_t kExhaustiveMaxVertices = 10;

class GraphTooLargeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Minimum over every simple path, by depth-first enumeration. Only for
/// graphs with at most kExhaustiveMaxVertices vertices.
std::vector<Cost> exhaustive_shortest_paths(const CsrGraph& graph, VertexId source);

using EdgePair = std::pair<VertexId, Cost>;  // (destination, weight)

/// Structural fold of the min-update over a list of edges:
///   fold([], base, u)      = u
///   fold(e :: rest, base, u) = fold(rest, base, u[e.dest] <- min(u[e.dest], base + e.weight))
/// with the sum saturating at kInf.
std::vector<Cost> fold_relax_oracle(std::span<const EdgePair> pairs, Cost base,
                                    std::vector<Cost> updating);

/// The (destination, weight) list of v's out-edges, in edge order.
std::vector<EdgePair> out_edge_pairs(const CsrGraph& graph, VertexId v);

}  // namespace csrpath

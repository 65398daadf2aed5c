#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace csrpath {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using Cost = std::uint64_t;

/// Unreached sentinel and saturation ceiling for cost arithmetic.
inline constexpr Cost kInf = std::numeric_limits<Cost>::max();

/// Largest edge weight a graph may carry. kInf is reserved.
inline constexpr Cost kMaxWeight = kInf - 1;

/// Largest vertex count addressable by a 32-bit VertexId.
inline constexpr std::uint64_t kMaxVertexCount = std::numeric_limits<VertexId>::max();

/// a + b, clamped to kInf. Never wraps below either operand.
constexpr Cost saturating_add(Cost a, Cost b) noexcept {
  const Cost sum = a + b;
  return sum < a ? kInf : sum;
}

/// Thrown when a vertex id or other index falls outside the graph.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Thrown for invalid parameters to a public operation.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Half-open range of edge indices [begin, end).
struct EdgeRange {
  EdgeIndex begin = 0;
  EdgeIndex end = 0;

  constexpr EdgeIndex size() const noexcept { return end - begin; }
  constexpr bool empty() const noexcept { return begin == end; }
  friend constexpr bool operator==(const EdgeRange&, const EdgeRange&) = default;
};

/// Unvalidated CSR arrays together with their declared counts. This is what
/// readers and generators produce before a CsrGraph is formed.
struct GraphArrays {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::vector<EdgeIndex> vertex_array;  // first edge of each vertex
  std::vector<VertexId> edge_array;     // destination of each edge
  std::vector<Cost> weight_array;       // weight of each edge

  friend bool operator==(const GraphArrays&, const GraphArrays&) = default;
};

enum class ViolationKind {
  kVertexArrayLength,
  kEdgeArrayLength,
  kWeightArrayLength,
  kVertexCountTooLarge,
  kVertexArrayStart,
  kVertexArrayNotNondecreasing,
  kVertexArrayEntryOutOfRange,
  kEdgeDestinationOutOfRange,
  kWeightTooLarge,
};

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::uint64_t index = 0;  // offending array position (0 for length checks)
  std::uint64_t value = 0;  // offending value (actual length for length checks)

  std::string message() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
  bool has(ViolationKind kind) const noexcept;
  std::string summary(std::size_t max_lines = 10) const;
};

/// Checks every CSR invariant and enumerates all violations:
///  - array lengths equal the declared counts,
///  - vertex_array starts at 0, is nondecreasing and stays <= edge_count,
///  - every edge destination is < vertex_count,
///  - every weight is <= max_weight (< kInf).
/// Self-loops and parallel edges are accepted.
ValidationReport validate_graph(const GraphArrays& arrays, Cost max_weight = kMaxWeight);

class InvalidGraph : public std::invalid_argument {
 public:
  explicit InvalidGraph(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Immutable forward-star graph. A CsrGraph that exists always satisfies the
/// CSR invariants and may be shared across threads.
class CsrGraph {
 public:
  CsrGraph() = default;

  /// Throws InvalidGraph if validate_graph(arrays, max_weight) is not ok.
  explicit CsrGraph(GraphArrays arrays, Cost max_weight = kMaxWeight);

  std::uint64_t vertex_count() const noexcept { return arrays_.vertex_count; }
  std::uint64_t edge_count() const noexcept { return arrays_.edge_count; }

  std::span<const EdgeIndex> vertex_array() const noexcept { return arrays_.vertex_array; }
  std::span<const VertexId> edge_array() const noexcept { return arrays_.edge_array; }
  std::span<const Cost> weight_array() const noexcept { return arrays_.weight_array; }

  const GraphArrays& arrays() const noexcept { return arrays_; }

  /// Edges leaving `v`. Throws RangeError if v >= vertex_count().
  EdgeRange out_edge_range(VertexId v) const;

  /// Requires v < vertex_count(). The last vertex ends at edge_count.
  EdgeRange out_edge_range_unchecked(VertexId v) const noexcept {
    const EdgeIndex begin = arrays_.vertex_array[v];
    const EdgeIndex end = v + std::uint64_t{1} < arrays_.vertex_count
                              ? arrays_.vertex_array[v + 1]
                              : arrays_.edge_count;
    return {begin, end};
  }

  bool contains(std::uint64_t v) const noexcept { return v < arrays_.vertex_count; }

  /// Throws RangeError naming `what` if v is not a vertex of this graph.
  void check_vertex(std::uint64_t v, const char* what = "vertex") const;

  friend bool operator==(const CsrGraph& a, const CsrGraph& b) { return a.arrays_ == b.arrays_; }

 private:
  GraphArrays arrays_;
};

/// Always ok; lets callers treat validated and candidate graphs alike.
ValidationReport validate_graph(const CsrGraph& graph);

}  // namespace csrpath

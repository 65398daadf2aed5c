#include "csrpath/graph.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace csrpath {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kVertexArrayLength:
      return "vertex_array length does not match vertex_count";
    case ViolationKind::kEdgeArrayLength:
      return "edge_array length does not match edge_count";
    case ViolationKind::kWeightArrayLength:
      return "weight_array length does not match edge_count";
    case ViolationKind::kVertexCountTooLarge:
      return "vertex_count exceeds the 32-bit vertex id range";
    case ViolationKind::kVertexArrayStart:
      return "vertex_array does not start at edge 0";
    case ViolationKind::kVertexArrayNotNondecreasing:
      return "vertex_array not nondecreasing";
    case ViolationKind::kVertexArrayEntryOutOfRange:
      return "vertex_array entry exceeds edge_count";
    case ViolationKind::kEdgeDestinationOutOfRange:
      return "edge destination out of range";
    case ViolationKind::kWeightTooLarge:
      return "edge weight too large";
  }
  return "unknown violation";
}

std::string Violation::message() const {
  std::ostringstream out;
  out << to_string(kind);
  switch (kind) {
    case ViolationKind::kVertexArrayLength:
    case ViolationKind::kEdgeArrayLength:
    case ViolationKind::kWeightArrayLength:
      out << " (actual length " << value << ")";
      break;
    case ViolationKind::kVertexCountTooLarge:
      out << " (" << value << ")";
      break;
    default:
      out << " at index " << index << " (value " << value << ")";
      break;
  }
  return out.str();
}

bool ValidationReport::has(ViolationKind kind) const noexcept {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

std::string ValidationReport::summary(std::size_t max_lines) const {
  if (ok()) return "ok";
  std::ostringstream out;
  out << violations.size() << " violation(s)";
  for (std::size_t i = 0; i < violations.size() && i < max_lines; ++i) {
    out << "\n  " << violations[i].message();
  }
  if (violations.size() > max_lines) out << "\n  ...";
  return out.str();
}

ValidationReport validate_graph(const GraphArrays& g, Cost max_weight) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::uint64_t index, std::uint64_t value) {
    report.violations.push_back({kind, index, value});
  };
  max_weight = std::min(max_weight, kMaxWeight);

  if (g.vertex_array.size() != g.vertex_count) {
    add(ViolationKind::kVertexArrayLength, 0, g.vertex_array.size());
  }
  if (g.edge_array.size() != g.edge_count) {
    add(ViolationKind::kEdgeArrayLength, 0, g.edge_array.size());
  }
  if (g.weight_array.size() != g.edge_count) {
    add(ViolationKind::kWeightArrayLength, 0, g.weight_array.size());
  }
  if (g.vertex_count > kMaxVertexCount) {
    add(ViolationKind::kVertexCountTooLarge, 0, g.vertex_count);
  }

  const auto& va = g.vertex_array;
  if (!va.empty() && va[0] != 0) add(ViolationKind::kVertexArrayStart, 0, va[0]);
  for (std::size_t i = 0; i < va.size(); ++i) {
    if (i + 1 < va.size() && va[i] > va[i + 1]) {
      add(ViolationKind::kVertexArrayNotNondecreasing, i, va[i]);
    }
    if (va[i] > g.edge_count) add(ViolationKind::kVertexArrayEntryOutOfRange, i, va[i]);
  }
  for (std::size_t i = 0; i < g.edge_array.size(); ++i) {
    if (g.edge_array[i] >= g.vertex_count) {
      add(ViolationKind::kEdgeDestinationOutOfRange, i, g.edge_array[i]);
    }
  }
  for (std::size_t i = 0; i < g.weight_array.size(); ++i) {
    if (g.weight_array[i] > max_weight) add(ViolationKind::kWeightTooLarge, i, g.weight_array[i]);
  }
  return report;
}

ValidationReport validate_graph(const CsrGraph&) { return {}; }

InvalidGraph::InvalidGraph(ValidationReport report)
    : std::invalid_argument("invalid graph: " + report.summary()), report_(std::move(report)) {}

CsrGraph::CsrGraph(GraphArrays arrays, Cost max_weight) : arrays_(std::move(arrays)) {
  ValidationReport report = validate_graph(arrays_, max_weight);
  if (!report.ok()) throw InvalidGraph(std::move(report));
}

void CsrGraph::check_vertex(std::uint64_t v, const char* what) const {
  if (v >= arrays_.vertex_count) {
    throw RangeError(std::string(what) + " " + std::to_string(v) + " out of range (vertex_count " +
                     std::to_string(arrays_.vertex_count) + ")");
  }
}

EdgeRange CsrGraph::out_edge_range(VertexId v) const {
  check_vertex(v);
  return out_edge_range_unchecked(v);
}

}  // namespace csrpath

#include "csrpath/path.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace csrpath {

void VertexStack::push(VertexId v) {
  if (full()) {
    throw StackOverflowError("vertex stack overflow (capacity " + std::to_string(capacity_) + ")");
  }
  items_.push_back(v);
}

VertexId VertexStack::pop() {
  const VertexId v = top();
  items_.pop_back();
  return v;
}

VertexId VertexStack::top() const {
  if (items_.empty()) throw StackUnderflowError("vertex stack underflow");
  return items_.back();
}

ReverseIndex::ReverseIndex(const CsrGraph& graph) {
  const std::size_t n = graph.vertex_count();
  const auto edges = graph.edge_array();
  const auto weights = graph.weight_array();

  offsets_.assign(n + 1, 0);
  for (VertexId d : edges) ++offsets_[d + 1];
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];

  entries_.resize(edges.size());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t u = 0; u < n; ++u) {
    const EdgeRange range = graph.out_edge_range_unchecked(static_cast<VertexId>(u));
    for (EdgeIndex i = range.begin; i < range.end; ++i) {
      entries_[fill[edges[i]]++] = {static_cast<VertexId>(u), weights[i]};
    }
  }
}

ReverseIndex build_reverse_index(const CsrGraph& graph) { return ReverseIndex(graph); }

BrokenPathError::BrokenPathError(VertexId from, VertexId to)
    : std::runtime_error("no edge " + std::to_string(from) + " -> " + std::to_string(to)),
      from_(from),
      to_(to) {}

namespace {

// Tight predecessors of v, strictly cheaper ones first, then by id.
std::vector<VertexId> tight_predecessors(const ReverseIndex& reverse, std::span<const Cost> cost,
                                         VertexId v) {
  std::vector<VertexId> out;
  for (const Predecessor& p : reverse.predecessors(v)) {
    if (cost[p.vertex] != kInf && saturating_add(cost[p.vertex], p.weight) == cost[v]) {
      out.push_back(p.vertex);
    }
  }
  std::sort(out.begin(), out.end(), [&](VertexId a, VertexId b) {
    const bool a_lower = cost[a] < cost[v];
    const bool b_lower = cost[b] < cost[v];
    if (a_lower != b_lower) return a_lower;
    return a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Path recover_path(const CsrGraph& graph, const ReverseIndex& reverse, std::span<const Cost> cost,
                  VertexId source, VertexId dest) {
  graph.check_vertex(source, "source");
  graph.check_vertex(dest, "destination");
  const std::size_t n = graph.vertex_count();
  if (cost.size() != n || reverse.vertex_count() != n) {
    throw InconsistentCostError("cost array or reverse index not sized to the graph");
  }
  if (cost[dest] == kInf) {
    throw UnreachableError("vertex " + std::to_string(dest) + " is unreachable from " +
                           std::to_string(source));
  }
  if (cost[source] != 0) {
    throw InconsistentCostError("cost[source] is " + std::to_string(cost[source]) + ", not 0");
  }

  struct Frame {
    std::vector<VertexId> candidates;
    std::size_t next = 0;
  };

  VertexStack stack(n);
  std::vector<Frame> frames;
  std::vector<std::uint8_t> visited(n, 0);

  stack.push(dest);
  visited[dest] = 1;
  frames.push_back({tight_predecessors(reverse, cost, dest)});

  while (!stack.empty() && stack.top() != source) {
    Frame& frame = frames.back();
    if (frame.next == frame.candidates.size()) {
      stack.pop();
      frames.pop_back();
      continue;
    }
    const VertexId u = frame.candidates[frame.next++];
    if (visited[u]) continue;
    visited[u] = 1;
    stack.push(u);
    frames.push_back({tight_predecessors(reverse, cost, u)});
  }

  if (stack.empty()) {
    throw InconsistentCostError("no chain of tight edges leads from " + std::to_string(source) +
                                " to " + std::to_string(dest));
  }

  Path path;
  path.reserve(stack.depth());
  while (!stack.empty()) path.push_back(stack.pop());
  return path;
}

Path recover_path(const CsrGraph& graph, std::span<const Cost> cost, VertexId source,
                  VertexId dest) {
  return recover_path(graph, ReverseIndex(graph), cost, source, dest);
}

Cost path_cost(const CsrGraph& graph, std::span<const VertexId> path) {
  if (path.empty()) throw std::invalid_argument("path_cost of an empty path");
  for (VertexId v : path) graph.check_vertex(v, "path vertex");

  const auto edges = graph.edge_array();
  const auto weights = graph.weight_array();
  Cost total = 0;
  for (std::size_t k = 0; k + 1 < path.size(); ++k) {
    const EdgeRange range = graph.out_edge_range_unchecked(path[k]);
    Cost best = kInf;
    for (EdgeIndex i = range.begin; i < range.end; ++i) {
      if (edges[i] == path[k + 1]) best = std::min(best, weights[i]);
    }
    if (best == kInf) throw BrokenPathError(path[k], path[k + 1]);
    total = saturating_add(total, best);
  }
  return total;
}

const ReverseIndex& PathRecovery::reverse_index() const {
  std::call_once(once_, [this] { reverse_ = std::make_unique<ReverseIndex>(*graph_); });
  return *reverse_;
}

}  // namespace csrpath

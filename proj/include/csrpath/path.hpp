#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "csrpath/graph.hpp"

namespace csrpath {

class StackOverflowError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class StackUnderflowError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Bounded LIFO stack of vertex ids.
class VertexStack {
 public:
  explicit VertexStack(std::size_t capacity) : capacity_(capacity) { items_.reserve(capacity); }

  /// Throws StackOverflowError when depth() == capacity().
  void push(VertexId v);
  /// Throws StackUnderflowError when empty.
  VertexId pop();
  /// Throws StackUnderflowError when empty.
  VertexId top() const;

  std::size_t depth() const noexcept { return items_.size(); }
  std::size_t capacity() const noexcept { return capacity_; }
  bool empty() const noexcept { return items_.empty(); }
  bool full() const noexcept { return items_.size() == capacity_; }

  /// Bottom first.
  std::span<const VertexId> contents() const noexcept { return items_; }

  friend bool operator==(const VertexStack&, const VertexStack&) = default;

 private:
  std::size_t capacity_;
  std::vector<VertexId> items_;
};

struct Predecessor {
  VertexId vertex;
  Cost weight;
  friend bool operator==(const Predecessor&, const Predecessor&) = default;
};

/// Transposed adjacency: for each vertex, the (origin, weight) of every edge
/// entering it, ordered by forward edge index (hence by ascending origin).
class ReverseIndex {
 public:
  explicit ReverseIndex(const CsrGraph& graph);

  std::span<const Predecessor> predecessors(VertexId v) const {
    return std::span<const Predecessor>(entries_).subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
  }
  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t pair_count() const noexcept { return entries_.size(); }

 private:
  std::vector<std::size_t> offsets_;  // vertex_count + 1
  std::vector<Predecessor> entries_;
};

ReverseIndex build_reverse_index(const CsrGraph& graph);

using Path = std::vector<VertexId>;  // source first, destination last

class UnreachableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The cost array does not describe shortest paths in this graph from the
/// given source.
class InconsistentCostError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BrokenPathError : public std::runtime_error {
 public:
  BrokenPathError(VertexId from, VertexId to);
  VertexId from() const noexcept { return from_; }
  VertexId to() const noexcept { return to_; }

 private:
  VertexId from_;
  VertexId to_;
};

/// Reconstructs a shortest source -> dest path from a completed cost array by
/// walking tight edges (cost[u] + w == cost[current]) backward from dest.
/// Candidates with strictly smaller cost are tried first, then smallest id;
/// a vertex is never entered twice, and dead ends (possible only through
/// zero-weight cycles) are backtracked. The walk lives on a VertexStack
/// whose pops yield the path in source-to-dest order.
Path recover_path(const CsrGraph& graph, const ReverseIndex& reverse, std::span<const Cost> cost,
                  VertexId source, VertexId dest);

/// Convenience overload that builds a fresh reverse index.
Path recover_path(const CsrGraph& graph, std::span<const Cost> cost, VertexId source,
                  VertexId dest);

/// Saturating sum of the cheapest parallel edge between consecutive path
/// vertices. Throws BrokenPathError for a missing edge.
Cost path_cost(const CsrGraph& graph, std::span<const VertexId> path);

/// Path queries against one graph, with the reverse index built on first use
/// and shared afterwards. Safe to query from several threads.
class PathRecovery {
 public:
  explicit PathRecovery(const CsrGraph& graph) : graph_(&graph) {}

  const ReverseIndex& reverse_index() const;
  Path recover(std::span<const Cost> cost, VertexId source, VertexId dest) const {
    return recover_path(*graph_, reverse_index(), cost, source, dest);
  }

 private:
  const CsrGraph* graph_;
  mutable std::once_flag once_;
  mutable std::unique_ptr<ReverseIndex> reverse_;
};

}  // namespace csrpath

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "csrpath/engine.hpp"
#include "csrpath/graph.hpp"

namespace csrpath {

/// Costs from a set of source vertices, one row per source, row-major.
struct ApspResult {
  std::vector<VertexId> sources;
  std::uint64_t vertex_count = 0;
  std::vector<Cost> costs;         // sources.size() x vertex_count
  std::vector<RunStats> row_stats;  // one per source

  std::size_t row_count() const noexcept { return sources.size(); }
  std::span<const Cost> row(std::size_t i) const {
    return std::span<const Cost>(costs).subspan(i * vertex_count, vertex_count);
  }
  Cost at(std::size_t row_index, VertexId v) const { return costs.at(row_index * vertex_count + v); }
};

/// Thrown when the result matrix would exceed ApspConfig::memory_budget_bytes.
class MemoryBudgetError : public UsageError {
 public:
  using UsageError::UsageError;
};

struct ApspConfig {
  EngineConfig engine;
  /// Concurrent rows. Each row owns a private SsspState; with more than one
  /// row worker the per-row engine runs single-threaded.
  unsigned row_workers = 1;
  /// Upper bound on sources x vertex_count x sizeof(Cost).
  std::uint64_t memory_budget_bytes = std::uint64_t{1} << 30;
};

/// Runs SSSP from every source. All sources are range-checked before any work.
ApspResult run_apsp(const CsrGraph& graph, std::span<const VertexId> sources,
                    const ApspConfig& config = {});

/// Sources 0..count-1.
std::vector<VertexId> first_sources(std::uint64_t count);

}  // namespace csrpath

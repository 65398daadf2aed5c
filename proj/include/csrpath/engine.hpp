#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "csrpath/graph.hpp"

namespace csrpath {

#ifdef NDEBUG
inline constexpr bool kCheckInvariantsByDefault = false;
#else
inline constexpr bool kCheckInvariantsByDefault = true;
#endif

/// Per-run mutable state of the two-kernel frontier relaxation.
///   mask          - frontier, 1 if the vertex must relax its edges next pass
///   cost          - committed costs, written only by kernel 2
///   updating_cost - tentative costs, receives min-candidates from kernel 1
struct SsspState {
  std::vector<std::uint8_t> mask;
  std::vector<Cost> cost;
  std::vector<Cost> updating_cost;

  std::size_t size() const noexcept { return cost.size(); }
  friend bool operator==(const SsspState&, const SsspState&) = default;
};

/// Signals a broken engine invariant (iteration cap exceeded, kernel 2 fixed
/// point violated). Never thrown for valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct EngineConfig {
  /// Worker threads per pass. 0 selects std::thread::hardware_concurrency().
  unsigned workers = 0;
  /// Vertices per work item. 0 selects vertex_count / (4 * workers).
  std::size_t chunk_size = 0;
  /// Verify the kernel 2 fixed point (updating_cost == cost) and that the
  /// changed flag agrees with the mask after every iteration.
  bool check_invariants = kCheckInvariantsByDefault;

  unsigned resolved_workers() const noexcept;
  std::size_t resolved_chunk_size(std::size_t vertex_count) const noexcept;
};

struct RunStats {
  std::uint64_t iterations = 0;   // kernel1 + kernel2 rounds
  std::uint64_t relaxations = 0;  // edges scanned from masked vertices
  double wall_ms = 0.0;
};

struct SsspResult {
  std::vector<Cost> cost;
  RunStats stats;
};

/// Called after every kernel 2 pass with the 1-based iteration number.
using IterationObserver = std::function<void(std::uint64_t iteration, const SsspState&)>;

/// mask = e_source, cost = INF except cost[source] = 0, updating_cost = cost.
SsspState init_sssp(const CsrGraph& graph, VertexId source);

/// The index-marching edge loop of kernel 1: for each edge i leaving v,
/// updating[E[i]] = min(updating[E[i]], base + W[i]) with saturating add.
/// Returns the number of edges scanned.
std::uint64_t relax_edges(const CsrGraph& graph, VertexId v, Cost base,
                          std::span<Cost> updating) noexcept;

/// Kernel 1 body for one vertex. No-op unless mask[v] is set; clears mask[v].
/// Never writes cost. Returns the number of edges scanned.
std::uint64_t relax_vertex(const CsrGraph& graph, SsspState& state, VertexId v);

/// Kernel 1 in the canonical schedule (ascending vertex order).
std::uint64_t kernel1_pass(const CsrGraph& graph, SsspState& state);

/// Kernel 1 applied in the given vertex order. Any order (including ones
/// with repeats or omissions of unmasked vertices) yields the same state as
/// the canonical schedule as long as every masked vertex appears.
std::uint64_t kernel1_pass(const CsrGraph& graph, SsspState& state,
                           std::span<const VertexId> order);

/// Kernel 1 with the vertex range split into chunks across worker threads.
/// Destination updates use an atomic min, so the result is bit-identical to
/// the canonical schedule.
std::uint64_t kernel1_pass(const CsrGraph& graph, SsspState& state, const EngineConfig& config);

/// Kernel 2: commit improved tentative costs and re-mask them; otherwise
/// reset the tentative cost to the committed one. Returns whether any mask
/// bit was set. Afterwards updating_cost == cost.
bool kernel2_pass(const CsrGraph& graph, SsspState& state);
bool kernel2_pass(const CsrGraph& graph, SsspState& state, const EngineConfig& config);

bool mask_nonempty(const SsspState& state) noexcept;

/// Frontier-relaxation SSSP. Throws RangeError for a bad source and
/// InternalError if the iteration count exceeds vertex_count.
SsspResult run_sssp(const CsrGraph& graph, VertexId source, const EngineConfig& config = {},
                    const IterationObserver& observer = {});

/// 64-bit FNV-1a over the little-endian bytes of each cost.
std::uint64_t cost_checksum(std::span<const Cost> costs) noexcept;

}  // namespace csrpath

#include "csrpath/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <string>
#include <thread>

#include "parallel.hpp"

namespace csrpath {

namespace {

void check_state(const CsrGraph& graph, const SsspState& state) {
  const std::uint64_t n = graph.vertex_count();
  if (state.mask.size() != n || state.cost.size() != n || state.updating_cost.size() != n) {
    throw std::invalid_argument("SSSP state arrays are not sized to the graph (vertex_count " +
                                std::to_string(n) + ")");
  }
}

// Shared by every schedule so that they differ only in how updates land.
template <class MinUpdate>
std::uint64_t relax_edges_with(const CsrGraph& graph, VertexId v, Cost base, MinUpdate&& update) {
  const EdgeRange range = graph.out_edge_range_unchecked(v);
  const auto edges = graph.edge_array();
  const auto weights = graph.weight_array();
  for (EdgeIndex i = range.begin; i < range.end; ++i) {
    // Weight is indexed by the edge position i, never by edges[i].
    update(edges[i], saturating_add(base, weights[i]));
  }
  return range.size();
}

void atomic_min(Cost& cell, Cost candidate) noexcept {
  std::atomic_ref<Cost> ref(cell);
  Cost current = ref.load(std::memory_order_relaxed);
  while (candidate < current &&
         !ref.compare_exchange_weak(current, candidate, std::memory_order_relaxed)) {
  }
}

void verify_fixed_point(const SsspState& state, bool changed) {
  if (state.updating_cost != state.cost) {
    throw InternalError("kernel 2 left updating_cost != cost");
  }
  if (changed != mask_nonempty(state)) {
    throw InternalError("kernel 2 changed flag disagrees with mask");
  }
}

}  // namespace

unsigned EngineConfig::resolved_workers() const noexcept {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t EngineConfig::resolved_chunk_size(std::size_t vertex_count) const noexcept {
  if (chunk_size != 0) return chunk_size;
  return std::max<std::size_t>(1, vertex_count / (4 * std::size_t{resolved_workers()}));
}

SsspState init_sssp(const CsrGraph& graph, VertexId source) {
  graph.check_vertex(source, "source");
  const std::size_t n = graph.vertex_count();
  SsspState state;
  state.mask.assign(n, 0);
  state.cost.assign(n, kInf);
  state.mask[source] = 1;
  state.cost[source] = 0;
  state.updating_cost = state.cost;
  return state;
}

std::uint64_t relax_edges(const CsrGraph& graph, VertexId v, Cost base,
                          std::span<Cost> updating) noexcept {
  return relax_edges_with(graph, v, base, [&](VertexId d, Cost candidate) {
    updating[d] = std::min(updating[d], candidate);
  });
}

std::uint64_t relax_vertex(const CsrGraph& graph, SsspState& state, VertexId v) {
  check_state(graph, state);
  graph.check_vertex(v);
  if (!state.mask[v]) return 0;
  const std::uint64_t scanned = relax_edges(graph, v, state.cost[v], state.updating_cost);
  state.mask[v] = 0;
  return scanned;
}

std::uint64_t kernel1_pass(const CsrGraph& graph, SsspState& state) {
  check_state(graph, state);
  std::uint64_t scanned = 0;
  const auto n = static_cast<VertexId>(graph.vertex_count());
  for (VertexId v = 0; v < n; ++v) {
    if (!state.mask[v]) continue;
    scanned += relax_edges(graph, v, state.cost[v], state.updating_cost);
    state.mask[v] = 0;
  }
  return scanned;
}

std::uint64_t kernel1_pass(const CsrGraph& graph, SsspState& state,
                           std::span<const VertexId> order) {
  check_state(graph, state);
  std::uint64_t scanned = 0;
  for (VertexId v : order) scanned += relax_vertex(graph, state, v);
  return scanned;
}

std::uint64_t kernel1_pass(const CsrGraph& graph, SsspState& state, const EngineConfig& config) {
  const unsigned workers = config.resolved_workers();
  if (workers == 1) return kernel1_pass(graph, state);
  check_state(graph, state);

  const std::size_t n = graph.vertex_count();
  std::vector<std::uint64_t> scanned(workers, 0);
  detail::parallel_chunks(
      n, config.resolved_chunk_size(n), workers,
      [&](std::size_t begin, std::size_t end, unsigned worker) {
        std::uint64_t local = 0;
        for (std::size_t v = begin; v < end; ++v) {
          if (!state.mask[v]) continue;
          local += relax_edges_with(graph, static_cast<VertexId>(v), state.cost[v],
                                    [&](VertexId d, Cost candidate) {
                                      atomic_min(state.updating_cost[d], candidate);
                                    });
          state.mask[v] = 0;
        }
        scanned[worker] += local;
      });
  return std::accumulate(scanned.begin(), scanned.end(), std::uint64_t{0});
}

namespace {

bool kernel2_range(SsspState& state, std::size_t begin, std::size_t end) noexcept {
  bool changed = false;
  for (std::size_t v = begin; v < end; ++v) {
    if (state.updating_cost[v] < state.cost[v]) {
      state.cost[v] = state.updating_cost[v];
      state.mask[v] = 1;
      changed = true;
    } else {
      state.updating_cost[v] = state.cost[v];
    }
  }
  return changed;
}

}  // namespace

bool kernel2_pass(const CsrGraph& graph, SsspState& state) {
  check_state(graph, state);
  return kernel2_range(state, 0, state.size());
}

bool kernel2_pass(const CsrGraph& graph, SsspState& state, const EngineConfig& config) {
  const unsigned workers = config.resolved_workers();
  if (workers == 1) return kernel2_pass(graph, state);
  check_state(graph, state);
  std::atomic<bool> changed{false};
  detail::parallel_chunks(state.size(), config.resolved_chunk_size(state.size()), workers,
                          [&](std::size_t begin, std::size_t end, unsigned) {
                            if (kernel2_range(state, begin, end)) {
                              changed.store(true, std::memory_order_relaxed);
                            }
                          });
  return changed.load();
}

bool mask_nonempty(const SsspState& state) noexcept {
  return std::any_of(state.mask.begin(), state.mask.end(), [](std::uint8_t m) { return m != 0; });
}

SsspResult run_sssp(const CsrGraph& graph, VertexId source, const EngineConfig& config,
                    const IterationObserver& observer) {
  const auto start = std::chrono::steady_clock::now();
  SsspState state = init_sssp(graph, source);
  RunStats stats;

  bool frontier = true;
  while (frontier) {
    if (++stats.iterations > graph.vertex_count()) {
      throw InternalError("SSSP exceeded " + std::to_string(graph.vertex_count()) +
                          " iterations");
    }
    stats.relaxations += kernel1_pass(graph, state, config);
    frontier = kernel2_pass(graph, state, config);
    if (config.check_invariants) verify_fixed_point(state, frontier);
    if (observer) observer(stats.iterations, state);
  }

  stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(state.cost), stats};
}

std::uint64_t cost_checksum(std::span<const Cost> costs) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (Cost c : costs) {
    for (int byte = 0; byte < 8; ++byte) {
      hash ^= (c >> (8 * byte)) & 0xffU;
      hash *= 0x100000001b3ULL;
    }
  }
  return hash;
}

}  // namespace csrpath

#include "csrpath/apsp.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parallel.hpp"

namespace csrpath {

ApspResult run_apsp(const CsrGraph& graph, std::span<const VertexId> sources,
                    const ApspConfig& config) {
  if (sources.empty()) throw UsageError("run_apsp requires at least one source");
  for (VertexId s : sources) graph.check_vertex(s, "source");

  const std::uint64_t n = graph.vertex_count();
  const unsigned __int128 bytes =
      static_cast<unsigned __int128>(sources.size()) * n * sizeof(Cost);
  if (bytes > config.memory_budget_bytes) {
    const std::uint64_t per_batch = std::max<std::uint64_t>(
        1, config.memory_budget_bytes / std::max<std::uint64_t>(1, n * sizeof(Cost)));
    throw MemoryBudgetError("result matrix for " + std::to_string(sources.size()) +
                            " sources x " + std::to_string(n) +
                            " vertices exceeds the memory budget of " +
                            std::to_string(config.memory_budget_bytes) +
                            " bytes; run the sources in batches of at most " +
                            std::to_string(per_batch));
  }

  ApspResult result;
  result.sources.assign(sources.begin(), sources.end());
  result.vertex_count = n;
  result.costs.resize(sources.size() * n);
  result.row_stats.resize(sources.size());

  EngineConfig engine = config.engine;
  if (config.row_workers > 1) engine.workers = 1;

  detail::parallel_chunks(sources.size(), 1, std::max(1u, config.row_workers),
                          [&](std::size_t begin, std::size_t end, unsigned) {
                            for (std::size_t i = begin; i < end; ++i) {
                              SsspResult row = run_sssp(graph, sources[i], engine);
                              std::copy(row.cost.begin(), row.cost.end(),
                                        result.costs.begin() + static_cast<std::ptrdiff_t>(i * n));
                              result.row_stats[i] = row.stats;
                            }
                          });
  return result;
}

std::vector<VertexId> first_sources(std::uint64_t count) {
  std::vector<VertexId> out(count);
  std::iota(out.begin(), out.end(), VertexId{0});
  return out;
}

}  // namespace csrpath

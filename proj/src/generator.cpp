#include "csrpath/generator.hpp"

#include <string>

namespace csrpath {

CsrGraph generate_graph(const GeneratorParams& p) {
  if (p.vertex_count < 1 || p.vertex_count > kMaxVertexCount) {
    throw UsageError("vertex_count must be in [1, " + std::to_string(kMaxVertexCount) + "], got " +
                     std::to_string(p.vertex_count));
  }
  if (p.max_weight < 1 || p.max_weight > kMaxWeight) {
    throw UsageError("max_weight must be in [1, INF), got " + std::to_string(p.max_weight));
  }
  const unsigned __int128 edges = static_cast<unsigned __int128>(p.vertex_count) * p.edges_per_vertex;
  if (edges > (std::uint64_t{1} << 40)) {
    throw UsageError("edge count " + std::to_string(static_cast<std::uint64_t>(edges)) +
                     " too large");
  }

  GraphArrays g;
  g.vertex_count = p.vertex_count;
  g.edge_count = static_cast<std::uint64_t>(edges);
  g.vertex_array.resize(g.vertex_count);
  g.edge_array.resize(g.edge_count);
  g.weight_array.resize(g.edge_count);

  for (std::uint64_t v = 0; v < g.vertex_count; ++v) {
    const std::uint64_t first = v * p.edges_per_vertex;
    g.vertex_array[v] = first;
    SplitMix64 rng(SplitMix64(p.seed ^ (v * 0x9e3779b97f4a7c15ULL)).next());
    for (std::uint64_t k = 0; k < p.edges_per_vertex; ++k) {
      g.edge_array[first + k] = static_cast<VertexId>(rng.below(g.vertex_count));
      g.weight_array[first + k] = 1 + rng.below(p.max_weight);
    }
  }
  return CsrGraph(std::move(g));
}

}  // namespace csrpath

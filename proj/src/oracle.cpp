#include "csrpath/oracle.hpp"

#include <functional>
#include <queue>
#include <string>

namespace csrpath {

namespace {

using Wide = unsigned __int128;

constexpr Wide kUnreached = ~Wide{0};

Wide checked_add(Wide a, Wide b) {
  if (a > kUnreached - b) throw std::overflow_error("oracle distance overflowed 128 bits");
  return a + b;
}

std::vector<Cost> clamp(const std::vector<Wide>& dist) {
  std::vector<Cost> out(dist.size());
  for (std::size_t v = 0; v < dist.size(); ++v) {
    out[v] = dist[v] >= kInf ? kInf : static_cast<Cost>(dist[v]);
  }
  return out;
}

}  // namespace

std::vector<Cost> dijkstra_reference(const CsrGraph& graph, VertexId source) {
  graph.check_vertex(source, "source");
  const std::size_t n = graph.vertex_count();
  const auto vertices = graph.vertex_array();
  const auto edges = graph.edge_array();
  const auto weights = graph.weight_array();

  std::vector<Wide> dist(n, kUnreached);
  std::vector<bool> settled(n, false);
  using Entry = std::pair<Wide, VertexId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;

  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    if (settled[u]) continue;
    settled[u] = true;
    const std::size_t end = u + 1 < n ? vertices[u + 1] : edges.size();
    for (std::size_t i = vertices[u]; i < end; ++i) {
      const VertexId v = edges[i];
      const Wide candidate = checked_add(d, weights[i]);
      if (!settled[v] && candidate < dist[v]) {
        dist[v] = candidate;
        heap.emplace(candidate, v);
      }
    }
  }
  return clamp(dist);
}

std::vector<Cost> exhaustive_shortest_paths(const CsrGraph& graph, VertexId source) {
  if (graph.vertex_count() > kExhaustiveMaxVertices) {
    throw GraphTooLargeError("exhaustive enumeration supports at most " +
                             std::to_string(kExhaustiveMaxVertices) + " vertices, got " +
                             std::to_string(graph.vertex_count()));
  }
  graph.check_vertex(source, "source");
  const std::size_t n = graph.vertex_count();
  const auto vertices = graph.vertex_array();
  const auto edges = graph.edge_array();
  const auto weights = graph.weight_array();

  // Simple paths are vertex sequences; between two consecutive vertices only
  // the cheapest parallel edge can matter.
  std::vector<Wide> hop(n * n, kUnreached);
  for (std::size_t u = 0; u < n; ++u) {
    const std::size_t end = u + 1 < n ? vertices[u + 1] : edges.size();
    for (std::size_t i = vertices[u]; i < end; ++i) {
      Wide& cell = hop[u * n + edges[i]];
      if (weights[i] < cell) cell = weights[i];
    }
  }

  std::vector<Wide> best(n, kUnreached);
  std::vector<bool> on_path(n, false);

  std::function<void(std::size_t, Wide)> extend = [&](std::size_t u, Wide length) {
    if (length < best[u]) best[u] = length;
    on_path[u] = true;
    for (std::size_t v = 0; v < n; ++v) {
      if (!on_path[v] && hop[u * n + v] != kUnreached) {
        extend(v, checked_add(length, hop[u * n + v]));
      }
    }
    on_path[u] = false;
  };
  extend(source, 0);
  return clamp(best);
}

std::vector<Cost> fold_relax_oracle(std::span<const EdgePair> pairs, Cost base,
                                    std::vector<Cost> updating) {
  if (pairs.empty()) return updating;
  const auto& [dest, weight] = pairs.front();
  const Cost candidate = saturating_add(base, weight);
  if (candidate < updating.at(dest)) updating[dest] = candidate;
  return fold_relax_oracle(pairs.subspan(1), base, std::move(updating));
}

std::vector<EdgePair> out_edge_pairs(const CsrGraph& graph, VertexId v) {
  const EdgeRange range = graph.out_edge_range(v);
  std::vector<EdgePair> pairs;
  pairs.reserve(range.size());
  for (EdgeIndex i = range.begin; i < range.end; ++i) {
    pairs.emplace_back(graph.edge_array()[i], graph.weight_array()[i]);
  }
  return pairs;
}

}  // namespace csrpath

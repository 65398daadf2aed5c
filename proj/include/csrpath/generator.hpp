#pragma once

#include <cstdint>

#include "csrpath/graph.hpp"

namespace csrpath {

/// SplitMix64 (Steele, Lea, Flood 2014). Fixed algorithm so that generated
/// graphs are reproducible across platforms and language bindings.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by 64x64 -> 128 multiply-high; bound > 0.
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

struct GeneratorParams {
  std::uint64_t vertex_count = 1000;
  std::uint64_t edges_per_vertex = 10;
  Cost max_weight = 100;
  std::uint64_t seed = 1;
};

/// Defaults of the million-vertex benchmark configuration.
inline constexpr std::uint64_t kBenchVertices = 1'000'000;
inline constexpr std::uint64_t kBenchEdgesPerVertex = 10;

/// Random graph with exactly edges_per_vertex out-edges per vertex.
/// Vertex v draws from its own SplitMix64 stream seeded with
/// SplitMix64(seed ^ (v * golden)).next(); each edge draws its destination
/// (uniform in [0, V)) then its weight (uniform in [1, max_weight]).
/// Self-loops and parallel edges are kept. Throws UsageError on bad params.
CsrGraph generate_graph(const GeneratorParams& params);

}  // namespace csrpath

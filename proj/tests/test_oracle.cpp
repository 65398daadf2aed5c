#include <doctest.h>

#include <random>

#include "csrpath/oracle.hpp"
#include "test_support.hpp"

using namespace csrpath;
using namespace csrpath::testing;

TEST_CASE("dijkstra_reference examples") {
  CHECK(dijkstra_reference(triangle(), 0) == std::vector<Cost>{0, 1, 3});
  CHECK(dijkstra_reference(graph_from_edges(1, {}), 0) == std::vector<Cost>{0});
  const CsrGraph star = graph_from_edges(5, {{0, 1, 1}, {0, 2, 2}, {0, 3, 3}, {0, 4, 4}});
  CHECK(dijkstra_reference(star, 0) == std::vector<Cost>{0, 1, 2, 3, 4});
  CHECK(dijkstra_reference(star, 2) == std::vector<Cost>{kInf, kInf, 0, kInf, kInf});
  CHECK_THROWS_AS(dijkstra_reference(star, 5), RangeError);
}

TEST_CASE("dijkstra_reference clamps wide distances to INF") {
  const CsrGraph chain = graph_from_edges(3, {{0, 1, kInf - 3}, {1, 2, kInf - 3}});
  CHECK(dijkstra_reference(chain, 0) == std::vector<Cost>{0, kInf - 3, kInf});
  const CsrGraph exact = graph_from_edges(3, {{0, 1, kInf - 3}, {1, 2, 3}});
  // A path of total weight exactly INF is indistinguishable from unreached.
  CHECK(dijkstra_reference(exact, 0) == std::vector<Cost>{0, kInf - 3, kInf});
}

TEST_CASE("exhaustive_shortest_paths examples") {
  CHECK(exhaustive_shortest_paths(triangle(), 0) == std::vector<Cost>{0, 1, 3});
  CHECK_THROWS_AS(exhaustive_shortest_paths(graph_from_edges(11, {}), 0), GraphTooLargeError);
  CHECK_NOTHROW(exhaustive_shortest_paths(graph_from_edges(10, {}), 9));
}

TEST_CASE("dijkstra_reference agrees with exhaustive enumeration on small graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint64_t>(1, 10)(rng);
    const CsrGraph g = random_graph(rng, n, 16, static_cast<WeightMode>(trial % 3));
    const VertexId s = random_vertex(rng, g);
    REQUIRE(dijkstra_reference(g, s) == exhaustive_shortest_paths(g, s));
  }
}

TEST_CASE("fold_relax_oracle") {
  CHECK(fold_relax_oracle({}, 0, {4, 5}) == std::vector<Cost>{4, 5});
  const std::vector<EdgePair> one{{1, 5}};
  CHECK(fold_relax_oracle(one, 0, {0, kInf}) == std::vector<Cost>{0, 5});
  const std::vector<EdgePair> saturating{{1, kInf - 1}, {0, 1}};
  CHECK(fold_relax_oracle(saturating, 2, {9, kInf}) == std::vector<Cost>{3, kInf});
  const std::vector<EdgePair> repeated{{0, 7}, {0, 2}, {0, 5}};
  CHECK(fold_relax_oracle(repeated, 1, {kInf}) == std::vector<Cost>{3});
}

TEST_CASE("out_edge_pairs lists edges in order") {
  CHECK(out_edge_pairs(triangle(), 0) == std::vector<EdgePair>{{1, 1}, {2, 4}});
  CHECK(out_edge_pairs(triangle(), 2).empty());
}

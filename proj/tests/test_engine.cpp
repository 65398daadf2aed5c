#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "csrpath/engine.hpp"
#include "csrpath/oracle.hpp"
#include "test_support.hpp"

using namespace csrpath;
using namespace csrpath::testing;

namespace {

SsspState make_state(std::vector<std::uint8_t> mask, std::vector<Cost> cost, std::vector<Cost> u) {
  return {std::move(mask), std::move(cost), std::move(u)};
}

EngineConfig workers(unsigned w, std::size_t chunk = 0) {
  EngineConfig c;
  c.workers = w;
  c.chunk_size = chunk;
  c.check_invariants = true;
  return c;
}

}  // namespace

TEST_CASE("init_sssp") {
  const CsrGraph g = graph_from_edges(2, {{0, 1, 5}});
  const SsspState s0 = init_sssp(g, 0);
  CHECK(s0.mask == std::vector<std::uint8_t>{1, 0});
  CHECK(s0.cost == std::vector<Cost>{0, kInf});
  CHECK(s0.updating_cost == std::vector<Cost>{0, kInf});

  const SsspState s1 = init_sssp(g, 1);
  CHECK(s1.mask == std::vector<std::uint8_t>{0, 1});
  CHECK(s1.cost == std::vector<Cost>{kInf, 0});

  CHECK_THROWS_AS(init_sssp(g, 2), RangeError);
}

TEST_CASE("relax_vertex") {
  const CsrGraph g = graph_from_edges(2, {{0, 1, 5}});

  SUBCASE("masked vertex relaxes its edges into updating_cost only") {
    SsspState s = make_state({1, 0}, {0, kInf}, {0, kInf});
    CHECK(relax_vertex(g, s, 0) == 1);
    CHECK(s.updating_cost == std::vector<Cost>{0, 5});
    CHECK(s.mask == std::vector<std::uint8_t>{0, 0});
    CHECK(s.cost == std::vector<Cost>{0, kInf});
  }
  SUBCASE("unmasked vertex is a no-op") {
    SsspState s = make_state({1, 0}, {0, kInf}, {0, kInf});
    const SsspState before = s;
    CHECK(relax_vertex(g, s, 1) == 0);
    CHECK(s == before);
  }
  SUBCASE("candidate saturates instead of wrapping") {
    const CsrGraph big = graph_from_edges(2, {{0, 1, kInf - 1}});
    SsspState s = make_state({1, 0}, {3, kInf}, {3, kInf});
    relax_vertex(big, s, 0);
    CHECK(s.updating_cost[1] == kInf);
  }
  SUBCASE("existing lower tentative cost is kept") {
    SsspState s = make_state({1, 0}, {0, kInf}, {0, 2});
    relax_vertex(g, s, 0);
    CHECK(s.updating_cost[1] == 2);
  }
  SUBCASE("bad vertex or mis-sized state") {
    SsspState s = make_state({1, 0}, {0, kInf}, {0, kInf});
    CHECK_THROWS_AS(relax_vertex(g, s, 2), RangeError);
    SsspState bad = make_state({1}, {0}, {0});
    CHECK_THROWS_AS(relax_vertex(g, bad, 0), std::invalid_argument);
  }
}

TEST_CASE("weights are indexed by edge position, not destination") {
  // Vertex 0 has edges 0..2 to vertex 1,2,3 with weights 10,20,30. Reading
  // W[E[i]] would give 20,30,40 instead.
  const CsrGraph g = graph_from_edges(4, {{0, 1, 10}, {0, 2, 20}, {0, 3, 30}, {1, 0, 40}});
  SsspState s = init_sssp(g, 0);
  kernel1_pass(g, s);
  CHECK(s.updating_cost == std::vector<Cost>{0, 10, 20, 30});
}

TEST_CASE("kernel1_pass") {
  const CsrGraph g = graph_from_edges(2, {{0, 1, 5}});
  SUBCASE("empty frontier leaves the state unchanged") {
    SsspState s = make_state({0, 0}, {0, 7}, {0, 7});
    const SsspState before = s;
    CHECK(kernel1_pass(g, s) == 0);
    CHECK(s == before);
  }
  SUBCASE("single masked vertex equals relax_vertex") {
    SsspState a = init_sssp(g, 0), b = init_sssp(g, 0);
    kernel1_pass(g, a);
    relax_vertex(g, b, 0);
    CHECK(a == b);
  }
}

TEST_CASE("kernel1_pass schedules agree on a random 50-vertex graph") {
  std::mt19937_64 rng(50);
  const CsrGraph g = random_graph(rng, 50, 8, WeightMode::kSmall);
  SsspState s = init_sssp(g, 0);
  // Drive two iterations so that the frontier holds several vertices.
  for (int k = 0; k < 2; ++k) {
    kernel1_pass(g, s);
    kernel2_pass(g, s);
  }
  REQUIRE(mask_nonempty(s));

  SsspState seq = s;
  kernel1_pass(g, seq);

  for (unsigned w : {2u, 3u, 4u, 8u}) {
    for (std::size_t chunk : {std::size_t{1}, std::size_t{7}, std::size_t{0}}) {
      SsspState par = s;
      kernel1_pass(g, par, workers(w, chunk));
      CHECK(par == seq);
    }
  }
  std::vector<VertexId> order(50);
  std::iota(order.begin(), order.end(), 0);
  std::reverse(order.begin(), order.end());
  SsspState desc = s;
  kernel1_pass(g, desc, order);
  CHECK(desc == seq);
}

TEST_CASE("kernel2_pass") {
  const CsrGraph g = graph_from_edges(2, {{0, 1, 5}});
  SUBCASE("improvement is committed and re-masked") {
    SsspState s = make_state({0, 0}, {0, 5}, {0, 3});
    CHECK(kernel2_pass(g, s));
    CHECK(s.cost == std::vector<Cost>{0, 3});
    CHECK(s.updating_cost == std::vector<Cost>{0, 3});
    CHECK(s.mask == std::vector<std::uint8_t>{0, 1});
  }
  SUBCASE("worse tentative cost is reset to the committed one") {
    SsspState s = make_state({0, 0}, {0, 3}, {0, 7});
    CHECK_FALSE(kernel2_pass(g, s));
    CHECK(s.cost == std::vector<Cost>{0, 3});
    CHECK(s.updating_cost == std::vector<Cost>{0, 3});
    CHECK(s.mask == std::vector<std::uint8_t>{0, 0});
  }
  SUBCASE("fixed point") {
    SsspState s = make_state({0, 0}, {0, 3}, {0, 3});
    const SsspState before = s;
    CHECK_FALSE(kernel2_pass(g, s));
    CHECK(s == before);
  }
  SUBCASE("concurrent variant matches") {
    SsspState a = make_state({0, 0}, {0, 5}, {0, 3});
    SsspState b = a;
    CHECK(kernel2_pass(g, a) == kernel2_pass(g, b, workers(4, 1)));
    CHECK(a == b);
  }
}

TEST_CASE("mask_nonempty") {
  CHECK_FALSE(mask_nonempty(make_state({0, 0, 0}, {0, 0, 0}, {0, 0, 0})));
  CHECK(mask_nonempty(make_state({0, 1, 0}, {0, 0, 0}, {0, 0, 0})));
  const CsrGraph g = graph_from_edges(3, {});
  CHECK(mask_nonempty(init_sssp(g, 2)));
}

TEST_CASE("run_sssp examples") {
  CHECK(run_sssp(triangle(), 0).cost == std::vector<Cost>{0, 1, 3});
  CHECK(run_sssp(graph_from_edges(1, {}), 0).cost == std::vector<Cost>{0});
  CHECK(run_sssp(graph_from_edges(2, {}), 0).cost == std::vector<Cost>{0, kInf});
  CHECK_THROWS_AS(run_sssp(triangle(), 3), RangeError);
}

TEST_CASE("run_sssp stats") {
  const SsspResult r = run_sssp(triangle(), 0, workers(1));
  // Iteration 1 settles 1 and 2 (cost 4), iteration 2 improves 2 to 3,
  // iteration 3 relaxes 2 and finds nothing.
  CHECK(r.stats.iterations == 3);
  CHECK(r.stats.relaxations == 2 + 1 + 0);
  CHECK(r.stats.wall_ms >= 0.0);
}

TEST_CASE("run_sssp properties on random graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const auto n = std::uniform_int_distribution<std::uint64_t>(1, 120)(rng);
    const auto mode = static_cast<WeightMode>(trial % 3);
    const CsrGraph g = random_graph(rng, n, 6, mode);
    const VertexId source = random_vertex(rng, g);

    std::vector<Cost> previous;
    std::uint64_t last_iteration = 0;
    const auto observer = [&](std::uint64_t iteration, const SsspState& s) {
      REQUIRE(s.updating_cost == s.cost);
      REQUIRE(s.cost[source] == 0);
      if (!previous.empty()) {
        for (std::size_t v = 0; v < n; ++v) REQUIRE(s.cost[v] <= previous[v]);
      }
      previous = s.cost;
      last_iteration = iteration;
    };
    const SsspResult r = run_sssp(g, source, workers(1), observer);
    CHECK(r.stats.iterations == last_iteration);
    CHECK(r.stats.iterations <= n);
    CHECK(r.cost == dijkstra_reference(g, source));
  }
}

TEST_CASE("relax_edges equals the list fold (loop/fold bridge)") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const CsrGraph g = random_graph(rng, 30, 10, WeightMode::kMixed);
    const VertexId v = random_vertex(rng, g);
    std::vector<Cost> u(30);
    for (auto& c : u) c = draw_weight(rng, WeightMode::kMixed);
    const Cost base = draw_weight(rng, WeightMode::kMixed);

    std::vector<Cost> loop = u;
    relax_edges(g, v, base, loop);
    CHECK(fold_relax_oracle(out_edge_pairs(g, v), base, u) == loop);
  }
}

TEST_CASE("cost_checksum is FNV-1a over little-endian bytes") {
  // FNV-1a of the empty input is the offset basis.
  CHECK(cost_checksum({}) == 0xcbf29ce484222325ULL);
  const std::vector<Cost> a{0, 1, 3}, b{0, 1, 4};
  CHECK(cost_checksum(a) != cost_checksum(b));
  CHECK(cost_checksum(a) == cost_checksum(std::vector<Cost>{0, 1, 3}));
}

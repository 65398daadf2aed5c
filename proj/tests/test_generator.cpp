#include <doctest.h>

#include <algorithm>

#include "csrpath/generator.hpp"

using namespace csrpath;

TEST_CASE("SplitMix64 reference outputs") {
  // Published reference values for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
}

TEST_CASE("generate_graph shape") {
  const CsrGraph g = generate_graph({5, 0, 100, 1});
  CHECK(g.vertex_count() == 5);
  CHECK(g.edge_count() == 0);
  CHECK(std::vector<EdgeIndex>(g.vertex_array().begin(), g.vertex_array().end()) ==
        std::vector<EdgeIndex>{0, 0, 0, 0, 0});

  const CsrGraph h = generate_graph({100, 7, 9, 42});
  CHECK(h.edge_count() == 700);
  for (VertexId v = 0; v < 100; ++v) {
    CHECK(h.vertex_array()[v] == v * 7ULL);
    CHECK(h.out_edge_range(v).size() == 7);
  }
  const auto w = h.weight_array();
  CHECK(*std::min_element(w.begin(), w.end()) >= 1);
  CHECK(*std::max_element(w.begin(), w.end()) <= 9);
  // 700 draws from [1, 9] hit both ends.
  CHECK(*std::min_element(w.begin(), w.end()) == 1);
  CHECK(*std::max_element(w.begin(), w.end()) == 9);
  CHECK(validate_graph(h.arrays()).ok());
}

TEST_CASE("generate_graph at benchmark scale has ten million edges") {
  const CsrGraph g = generate_graph({kBenchVertices, kBenchEdgesPerVertex, 100, 7});
  CHECK(g.edge_count() == 10'000'000);
  CHECK(validate_graph(g.arrays()).ok());
}

TEST_CASE("generate_graph is reproducible") {
  const CsrGraph a = generate_graph({300, 5, 100, 9});
  const CsrGraph b = generate_graph({300, 5, 100, 9});
  const CsrGraph c = generate_graph({300, 5, 100, 10});
  CHECK(a == b);
  CHECK(a.arrays().edge_array != c.arrays().edge_array);
}

TEST_CASE("generate_graph rejects bad parameters") {
  CHECK_THROWS_AS(generate_graph({0, 1, 10, 1}), UsageError);
  CHECK_THROWS_AS(generate_graph({10, 1, 0, 1}), UsageError);
  CHECK_THROWS_AS(generate_graph({10, 1, kInf, 1}), UsageError);
  CHECK_NOTHROW(generate_graph({10, 1, kMaxWeight, 1}));
}

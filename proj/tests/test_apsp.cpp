#include <doctest.h>

#include <random>

#include "csrpath/apsp.hpp"
#include "csrpath/oracle.hpp"
#include "test_support.hpp"

using namespace csrpath;
using namespace csrpath::testing;

TEST_CASE("run_apsp examples") {
  const std::vector<VertexId> zero{0};
  const ApspResult tri = run_apsp(triangle(), zero);
  CHECK(tri.row_count() == 1);
  CHECK(tri.costs == std::vector<Cost>{0, 1, 3});

  const std::vector<VertexId> twice{0, 0};
  const ApspResult dup = run_apsp(triangle(), twice);
  CHECK(dup.costs == std::vector<Cost>{0, 1, 3, 0, 1, 3});

  const CsrGraph two = graph_from_edges(2, {{0, 1, 2}, {1, 0, 7}});
  const std::vector<VertexId> both{0, 1};
  const ApspResult r = run_apsp(two, both);
  CHECK(std::vector<Cost>(r.row(0).begin(), r.row(0).end()) == std::vector<Cost>{0, 2});
  CHECK(std::vector<Cost>(r.row(1).begin(), r.row(1).end()) == std::vector<Cost>{7, 0});
  CHECK(r.at(1, 0) == 7);
}

TEST_CASE("run_apsp errors") {
  CHECK_THROWS_AS(run_apsp(triangle(), std::vector<VertexId>{}), UsageError);
  CHECK_THROWS_AS(run_apsp(triangle(), std::vector<VertexId>{0, 3}), RangeError);

  ApspConfig tight;
  tight.memory_budget_bytes = 2 * 3 * sizeof(Cost) - 1;
  try {
    run_apsp(triangle(), std::vector<VertexId>{0, 1}, tight);
    FAIL("expected MemoryBudgetError");
  } catch (const MemoryBudgetError& e) {
    CHECK(std::string(e.what()).find("batches of at most 1") != std::string::npos);
  }
  tight.memory_budget_bytes = 2 * 3 * sizeof(Cost);
  CHECK_NOTHROW(run_apsp(triangle(), std::vector<VertexId>{0, 1}, tight));
}

TEST_CASE("rows are independent and match isolated runs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CsrGraph g = random_graph(rng, 60, 5, WeightMode::kSmall);
    std::vector<VertexId> sources;
    for (int k = 0; k < 6; ++k) sources.push_back(random_vertex(rng, g));

    ApspConfig parallel_rows;
    parallel_rows.row_workers = 3;
    const ApspResult a = run_apsp(g, sources);
    const ApspResult b = run_apsp(g, sources, parallel_rows);
    CHECK(a.costs == b.costs);
    for (std::size_t i = 0; i < sources.size(); ++i) {
      const auto row = a.row(i);
      CHECK(row[sources[i]] == 0);
      CHECK(std::vector<Cost>(row.begin(), row.end()) == run_sssp(g, sources[i]).cost);
      CHECK(a.row_stats[i].iterations >= 1);
    }
  }
}

TEST_CASE("first_sources") {
  CHECK(first_sources(3) == std::vector<VertexId>{0, 1, 2});
  CHECK(first_sources(0).empty());
}

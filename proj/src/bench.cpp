#include "csrpath/bench.hpp"

#include <chrono>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "csrpath/apsp.hpp"

namespace csrpath {

std::vector<BenchRecord> bench(const CsrGraph& graph, const BenchOptions& options) {
  if (options.repetitions == 0) throw UsageError("bench needs at least one repetition");
  ApspConfig config;
  config.engine = options.engine;
  config.memory_budget_bytes = ~std::uint64_t{0};

  std::vector<BenchRecord> records;
  for (std::uint64_t count : options.source_counts) {
    if (count == 0 || count > graph.vertex_count()) {
      throw UsageError("source count " + std::to_string(count) + " not in [1, vertex_count]");
    }
    const auto sources = first_sources(count);
    for (unsigned rep = 0; rep < options.repetitions; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      const ApspResult result = run_apsp(graph, sources, config);
      const auto stop = std::chrono::steady_clock::now();

      BenchRecord r;
      r.vertices = graph.vertex_count();
      r.edges = graph.edge_count();
      r.sources = count;
      r.workers = options.engine.resolved_workers();
      r.repetition = rep;
      for (const RunStats& s : result.row_stats) {
        r.iterations += s.iterations;
        r.relaxations += s.relaxations;
      }
      r.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
      r.checksum = cost_checksum(result.costs);
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::string to_json_line(const BenchRecord& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["vertices"] = r.vertices;
  j["edges"] = r.edges;
  j["sources"] = r.sources;
  j["workers"] = r.workers;
  j["repetition"] = r.repetition;
  j["iterations"] = r.iterations;
  j["relaxations"] = r.relaxations;
  j["wall_ms"] = r.wall_ms;
  j["checksum"] = r.checksum;
  return j.dump();
}

BenchRecord bench_record_from_json(const std::string& line) {
  const auto j = nlohmann::json::parse(line);
  BenchRecord r;
  r.command = j.at("command").get<std::string>();
  r.vertices = j.at("vertices").get<std::uint64_t>();
  r.edges = j.at("edges").get<std::uint64_t>();
  r.sources = j.at("sources").get<std::uint64_t>();
  r.workers = j.at("workers").get<unsigned>();
  r.repetition = j.value("repetition", std::uint64_t{0});
  r.iterations = j.at("iterations").get<std::uint64_t>();
  r.relaxations = j.value("relaxations", std::uint64_t{0});
  r.wall_ms = j.at("wall_ms").get<double>();
  r.checksum = j.at("checksum").get<std::uint64_t>();
  return r;
}

void write_bench_report(std::span<const BenchRecord> records, std::ostream& out) {
  for (const BenchRecord& r : records) out << to_json_line(r) << '\n';
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit_line needs two equally sized samples of at least 2 points");
  }
  const double n = static_cast<double>(x.size());
  const double mean_x = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double mean_y = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mean_x) * (x[i] - mean_x);
    sxy += (x[i] - mean_x) * (y[i] - mean_y);
    syy += (y[i] - mean_y) * (y[i] - mean_y);
  }
  if (sxx == 0) throw std::invalid_argument("fit_line needs at least two distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return fit;
}

}  // namespace csrpath

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "csrpath/engine.hpp"
#include "csrpath/graph.hpp"

namespace csrpath {

/// One timed APSP run over sources 0..sources-1.
struct BenchRecord {
  std::string command = "bench";
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t sources = 0;
  unsigned workers = 1;
  std::uint64_t repetition = 0;
  std::uint64_t iterations = 0;   // summed over sources
  std::uint64_t relaxations = 0;  // summed over sources
  double wall_ms = 0.0;
  std::uint64_t checksum = 0;     // FNV-1a over the whole result matrix
};

struct BenchOptions {
  std::vector<std::uint64_t> source_counts{1};
  unsigned repetitions = 1;
  EngineConfig engine;
};

/// Runs every source count `repetitions` times, sequentially, and returns
/// one record per run in (source count, repetition) order.
std::vector<BenchRecord> bench(const CsrGraph& graph, const BenchOptions& options);

/// Single-line JSON object with the record's fields.
std::string to_json_line(const BenchRecord& record);
BenchRecord bench_record_from_json(const std::string& line);
void write_bench_report(std::span<const BenchRecord> records, std::ostream& out);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace csrpath

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "csrpath/apsp.hpp"
#include "csrpath/graph.hpp"

namespace csrpath {

/// Malformed input. line() is 1-based, or 0 when no line applies (binary).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::uint64_t line, const std::string& reason);
  std::uint64_t line() const noexcept { return line_; }

 private:
  std::uint64_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GraphFormat { kText, kBinary };

GraphFormat parse_graph_format(const std::string& name);

inline constexpr int kTextFormatVersion = 1;
inline constexpr std::uint32_t kBinaryFormatVersion = 1;

// Text graph format, version 1:
//   csr 1
//   <vertex_count> <edge_count>
//   <vertex_array, space separated>      (empty line when vertex_count == 0)
//   <destination> <weight>                (edge_count lines)
void write_graph_text(const CsrGraph& graph, std::ostream& out);
CsrGraph read_graph_text(std::istream& in);

// Binary graph format, version 1, all integers little-endian:
//   "CSRB"  u32 version
//   u64 vertex_count  u64 edge_count
//   u64 vertex_array[vertex_count]
//   u32 edge_array[edge_count]
//   u64 weight_array[edge_count]
void write_graph_binary(const CsrGraph& graph, std::ostream& out);
CsrGraph read_graph_binary(std::istream& in);

void save_graph(const CsrGraph& graph, const std::filesystem::path& path, GraphFormat format);
/// Detects the format from the leading bytes.
CsrGraph load_graph(const std::filesystem::path& path);

// Cost matrix format: one row per line, values space separated, INF as "inf".
void write_costs(std::span<const Cost> costs, std::uint64_t columns, std::ostream& out);
void write_costs(const ApspResult& result, std::ostream& out);

struct CostMatrix {
  std::uint64_t rows = 0;
  std::uint64_t columns = 0;
  std::vector<Cost> values;  // row-major
  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;
};

/// All rows must have the same width. If expected_columns is nonzero the
/// width must equal it.
CostMatrix read_costs(std::istream& in, std::uint64_t expected_columns = 0);

// Path format: "path <source> <dest> cost <c>" then the vertices on one line.
void write_path(std::span<const VertexId> path, Cost cost, std::ostream& out);

}  // namespace csrpath

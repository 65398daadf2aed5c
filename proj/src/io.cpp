#include "csrpath/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string_view>

namespace csrpath {

ParseError::ParseError(std::uint64_t line, const std::string& reason)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + reason : reason),
      line_(line) {}

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "text") return GraphFormat::kText;
  if (name == "bin") return GraphFormat::kBinary;
  throw UsageError("unknown graph format '" + name + "' (expected text or bin)");
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  /// Next line, or throws ParseError(expectation) at end of input.
  std::string_view next(const char* expectation) {
    if (!std::getline(in_, line_)) {
      throw ParseError(number_ + 1, std::string("unexpected end of input, expected ") + expectation);
    }
    ++number_;
    if (!line_.empty() && line_.back() == '\r') line_.pop_back();
    return line_;
  }
  std::uint64_t number() const noexcept { return number_; }

 private:
  std::istream& in_;
  std::string line_;
  std::uint64_t number_ = 0;
};

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

std::uint64_t parse_u64(std::string_view token, std::uint64_t line, const char* what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size()) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return value;
}

// Line of the text format that holds a violation, for error messages.
std::uint64_t violation_line(const Violation& v) {
  switch (v.kind) {
    case ViolationKind::kVertexArrayStart:
    case ViolationKind::kVertexArrayNotNondecreasing:
    case ViolationKind::kVertexArrayEntryOutOfRange:
      return 3;
    case ViolationKind::kEdgeDestinationOutOfRange:
    case ViolationKind::kWeightTooLarge:
      return 4 + v.index;
    default:
      return 2;
  }
}

CsrGraph validated(GraphArrays arrays, bool text) {
  ValidationReport report = validate_graph(arrays);
  if (!report.ok()) {
    const Violation& first = report.violations.front();
    throw ParseError(text ? violation_line(first) : 0,
                     "graph validation failed: " + first.message() +
                         (report.violations.size() > 1
                              ? " (and " + std::to_string(report.violations.size() - 1) + " more)"
                              : ""));
  }
  return CsrGraph(std::move(arrays));
}

template <class T>
void put_le(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  for (std::size_t i = 0; i < sizeof(T); ++i) {
    bytes[i] = static_cast<char>((static_cast<std::uint64_t>(value) >> (8 * i)) & 0xff);
  }
  out.write(bytes.data(), bytes.size());
}

template <class T>
T get_le(std::istream& in, const char* what) {
  std::array<unsigned char, sizeof(T)> bytes{};
  if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) {
    throw ParseError(0, std::string("truncated binary graph while reading ") + what);
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= std::uint64_t{bytes[i]} << (8 * i);
  return static_cast<T>(value);
}

constexpr std::string_view kBinaryMagic = "CSRB";

void check_stream(const std::ostream& out) {
  if (!out) throw IoError("write failed");
}

}  // namespace

void write_graph_text(const CsrGraph& graph, std::ostream& out) {
  out << "csr " << kTextFormatVersion << '\n' << graph.vertex_count() << ' ' << graph.edge_count() << '\n';
  const auto vertices = graph.vertex_array();
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (v) out << ' ';
    out << vertices[v];
  }
  out << '\n';
  const auto edges = graph.edge_array();
  const auto weights = graph.weight_array();
  for (std::size_t i = 0; i < edges.size(); ++i) out << edges[i] << ' ' << weights[i] << '\n';
  check_stream(out);
}

CsrGraph read_graph_text(std::istream& in) {
  LineReader reader(in);

  const auto header = split(reader.next("header"));
  if (header.size() != 2 || header[0] != "csr") {
    throw ParseError(1, "malformed header, expected 'csr <version>'");
  }
  const std::uint64_t version = parse_u64(header[1], 1, "version");
  if (version != kTextFormatVersion) {
    throw ParseError(1, "unsupported format version " + std::to_string(version));
  }

  const auto counts = split(reader.next("counts"));
  if (counts.size() != 2) throw ParseError(2, "expected '<vertex_count> <edge_count>'");
  GraphArrays g;
  g.vertex_count = parse_u64(counts[0], 2, "vertex count");
  g.edge_count = parse_u64(counts[1], 2, "edge count");
  if (g.vertex_count > kMaxVertexCount) throw ParseError(2, "vertex count too large");

  const auto vertex_tokens = split(reader.next("vertex array"));
  if (vertex_tokens.size() != g.vertex_count) {
    throw ParseError(3, "vertex array has " + std::to_string(vertex_tokens.size()) +
                            " entries, expected " + std::to_string(g.vertex_count));
  }
  g.vertex_array.reserve(g.vertex_count);
  for (auto token : vertex_tokens) g.vertex_array.push_back(parse_u64(token, 3, "vertex array entry"));

  for (std::uint64_t i = 0; i < g.edge_count; ++i) {
    const auto edge = split(reader.next("edge line"));
    const std::uint64_t line = reader.number();
    if (edge.size() != 2) throw ParseError(line, "expected '<destination> <weight>'");
    const std::uint64_t dest = parse_u64(edge[0], line, "destination");
    if (dest > kMaxVertexCount) throw ParseError(line, "edge destination out of range");
    g.edge_array.push_back(static_cast<VertexId>(dest));
    g.weight_array.push_back(parse_u64(edge[1], line, "weight"));
  }

  std::string rest;
  while (std::getline(in, rest)) {
    if (!split(rest).empty()) {
      throw ParseError(reader.number() + 1, "trailing data after " + std::to_string(g.edge_count) +
                                                " edges");
    }
  }
  return validated(std::move(g), true);
}

void write_graph_binary(const CsrGraph& graph, std::ostream& out) {
  out.write(kBinaryMagic.data(), kBinaryMagic.size());
  put_le<std::uint32_t>(out, kBinaryFormatVersion);
  put_le<std::uint64_t>(out, graph.vertex_count());
  put_le<std::uint64_t>(out, graph.edge_count());
  for (EdgeIndex e : graph.vertex_array()) put_le<std::uint64_t>(out, e);
  for (VertexId v : graph.edge_array()) put_le<std::uint32_t>(out, v);
  for (Cost w : graph.weight_array()) put_le<std::uint64_t>(out, w);
  check_stream(out);
}

CsrGraph read_graph_binary(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), magic.size()) ||
      std::string_view(magic.data(), magic.size()) != kBinaryMagic) {
    throw ParseError(0, "not a binary CSR graph (bad magic)");
  }
  const auto version = get_le<std::uint32_t>(in, "version");
  if (version != kBinaryFormatVersion) {
    throw ParseError(0, "unsupported binary format version " + std::to_string(version));
  }
  GraphArrays g;
  g.vertex_count = get_le<std::uint64_t>(in, "vertex count");
  g.edge_count = get_le<std::uint64_t>(in, "edge count");
  if (g.vertex_count > kMaxVertexCount) throw ParseError(0, "vertex count too large");
  if (g.edge_count > (std::uint64_t{1} << 40)) throw ParseError(0, "edge count too large");

  // Grow as data arrives so a corrupt header cannot force a huge allocation.
  for (std::uint64_t v = 0; v < g.vertex_count; ++v) {
    g.vertex_array.push_back(get_le<std::uint64_t>(in, "vertex array"));
  }
  for (std::uint64_t i = 0; i < g.edge_count; ++i) {
    g.edge_array.push_back(get_le<std::uint32_t>(in, "edge array"));
  }
  for (std::uint64_t i = 0; i < g.edge_count; ++i) {
    g.weight_array.push_back(get_le<std::uint64_t>(in, "weight array"));
  }
  return validated(std::move(g), false);
}

void save_graph(const CsrGraph& graph, const std::filesystem::path& path, GraphFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  if (format == GraphFormat::kBinary) {
    write_graph_binary(graph, out);
  } else {
    write_graph_text(graph, out);
  }
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

CsrGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  const bool binary = in.gcount() == 4 && std::string_view(magic.data(), 4) == kBinaryMagic;
  in.clear();
  in.seekg(0);
  return binary ? read_graph_binary(in) : read_graph_text(in);
}

void write_costs(std::span<const Cost> costs, std::uint64_t columns, std::ostream& out) {
  if (columns == 0 || costs.size() % columns != 0) {
    throw UsageError("cost array size is not a multiple of the column count");
  }
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (i % columns) out << ' ';
    if (costs[i] == kInf) {
      out << "inf";
    } else {
      out << costs[i];
    }
    if ((i + 1) % columns == 0) out << '\n';
  }
  check_stream(out);
}

void write_costs(const ApspResult& result, std::ostream& out) {
  write_costs(result.costs, result.vertex_count, out);
}

CostMatrix read_costs(std::istream& in, std::uint64_t expected_columns) {
  CostMatrix m;
  m.columns = expected_columns;
  std::string line;
  std::uint64_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto tokens = split(line);
    if (tokens.empty()) {
      if (in.peek() == std::char_traits<char>::eof()) break;
      throw ParseError(number, "empty cost row");
    }
    if (m.columns == 0) m.columns = tokens.size();
    if (tokens.size() != m.columns) {
      throw ParseError(number, "row has " + std::to_string(tokens.size()) + " values, expected " +
                                   std::to_string(m.columns));
    }
    for (auto token : tokens) {
      if (token == "inf") {
        m.values.push_back(kInf);
      } else {
        const Cost c = parse_u64(token, number, "cost");
        if (c == kInf) throw ParseError(number, "finite cost equals the INF sentinel");
        m.values.push_back(c);
      }
    }
    ++m.rows;
  }
  return m;
}

void write_path(std::span<const VertexId> path, Cost cost, std::ostream& out) {
  if (path.empty()) throw UsageError("cannot write an empty path");
  out << "path " << path.front() << ' ' << path.back() << " cost " << cost << '\n';
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out << ' ';
    out << path[i];
  }
  out << '\n';
  check_stream(out);
}

}  // namespace csrpath

// csrpath command-line tool: gen, sssp, apsp, path, verify, bench.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csrpath/apsp.hpp"
#include "csrpath/bench.hpp"
#include "csrpath/engine.hpp"
#include "csrpath/generator.hpp"
#include "csrpath/io.hpp"
#include "csrpath/oracle.hpp"
#include "csrpath/path.hpp"

namespace {

using namespace csrpath;

enum ExitCode : int {
  kExitOk = 0,
  kExitRuntime = 1,
  kExitUsage = 2,
  kExitParse = 3,
  kExitMismatch = 4,
};

struct Options {
  std::string graph;
  std::uint64_t vertices = 1000;
  std::uint64_t degree = 10;
  Cost max_weight = 100;
  std::uint64_t seed = 1;
  std::vector<VertexId> sources;
  std::uint64_t source_count = 1;
  unsigned workers = 0;
  std::string format = "text";
  std::string out;
  // path
  VertexId source = 0;
  std::optional<VertexId> dest;
  // bench
  std::vector<std::uint64_t> source_counts{1};
  unsigned repetitions = 1;
};

void add_graph_options(CLI::App& cmd, Options& o) {
  cmd.add_option("--graph", o.graph, "Graph file (text or bin); generated when omitted");
  cmd.add_option("--vertices", o.vertices, "Vertex count for a generated graph")->capture_default_str();
  cmd.add_option("--degree", o.degree, "Out-edges per vertex for a generated graph")->capture_default_str();
  cmd.add_option("--max-weight", o.max_weight, "Largest generated weight")->capture_default_str();
  cmd.add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  cmd.add_option("--workers", o.workers, "Worker threads (0 = all cores)")->capture_default_str();
  cmd.add_option("--out", o.out, "Output file (default stdout)");
}

void add_source_options(CLI::App& cmd, Options& o) {
  auto* list = cmd.add_option("--sources", o.sources, "Explicit source vertices")->delimiter(',');
  cmd.add_option("--source-count", o.source_count, "Use sources 0..N-1")
      ->capture_default_str()
      ->excludes(list);
}

CsrGraph obtain_graph(const Options& o) {
  if (!o.graph.empty()) return load_graph(o.graph);
  return generate_graph({o.vertices, o.degree, o.max_weight, o.seed});
}

std::vector<VertexId> resolve_sources(const Options& o) {
  if (!o.sources.empty()) return o.sources;
  if (o.source_count == 0) throw UsageError("--source-count must be at least 1");
  return first_sources(o.source_count);
}

EngineConfig engine_config(const Options& o) {
  EngineConfig config;
  config.workers = o.workers;
  return config;
}

// Writes through `fn` to --out or stdout.
template <class Fn>
void with_output(const Options& o, bool binary, Fn&& fn) {
  if (o.out.empty()) {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(o.out, binary ? std::ios::binary : std::ios::out);
  if (!file) throw IoError("cannot open " + o.out + " for writing");
  fn(file);
  file.close();
  if (!file) throw IoError("failed writing " + o.out);
}

int cmd_gen(const Options& o) {
  const CsrGraph graph = generate_graph({o.vertices, o.degree, o.max_weight, o.seed});
  const GraphFormat format = parse_graph_format(o.format);
  with_output(o, format == GraphFormat::kBinary, [&](std::ostream& out) {
    if (format == GraphFormat::kBinary) {
      write_graph_binary(graph, out);
    } else {
      write_graph_text(graph, out);
    }
  });
  return kExitOk;
}

int cmd_sssp(const Options& o) {
  const CsrGraph graph = obtain_graph(o);
  const auto sources = resolve_sources(o);
  const SsspResult result = run_sssp(graph, sources.front(), engine_config(o));
  with_output(o, false, [&](std::ostream& out) {
    write_costs(result.cost, graph.vertex_count(), out);
  });
  std::cerr << "iterations " << result.stats.iterations << " relaxations "
            << result.stats.relaxations << " wall_ms " << result.stats.wall_ms << '\n';
  return kExitOk;
}

int cmd_apsp(const Options& o) {
  const CsrGraph graph = obtain_graph(o);
  const auto sources = resolve_sources(o);
  ApspConfig config;
  config.engine = engine_config(o);
  const ApspResult result = run_apsp(graph, sources, config);
  with_output(o, false, [&](std::ostream& out) { write_costs(result, out); });
  return kExitOk;
}

int cmd_path(const Options& o) {
  const CsrGraph graph = obtain_graph(o);
  graph.check_vertex(o.source, "source");
  graph.check_vertex(*o.dest, "destination");
  const SsspResult result = run_sssp(graph, o.source, engine_config(o));
  const Path path = recover_path(graph, result.cost, o.source, *o.dest);
  with_output(o, false, [&](std::ostream& out) { write_path(path, result.cost[*o.dest], out); });
  return kExitOk;
}

int cmd_verify(const Options& o) {
  const CsrGraph graph = obtain_graph(o);
  const auto sources = resolve_sources(o);
  const EngineConfig config = engine_config(o);
  std::uint64_t mismatches = 0;
  std::ostringstream report;
  for (VertexId s : sources) {
    const auto engine = run_sssp(graph, s, config).cost;
    const auto oracle = dijkstra_reference(graph, s);
    for (std::size_t v = 0; v < engine.size(); ++v) {
      if (engine[v] != oracle[v]) {
        if (++mismatches <= 10) {
          report << "mismatch source " << s << " vertex " << v << ": engine " << engine[v]
                 << " oracle " << oracle[v] << '\n';
        }
      }
    }
    if (graph.vertex_count() <= kExhaustiveMaxVertices) {
      const auto exhaustive = exhaustive_shortest_paths(graph, s);
      if (exhaustive != oracle) {
        ++mismatches;
        report << "mismatch source " << s << ": dijkstra disagrees with exhaustive enumeration\n";
      }
    }
  }
  with_output(o, false, [&](std::ostream& out) {
    out << report.str() << (mismatches ? "FAIL" : "OK") << " sources " << sources.size()
        << " vertices " << graph.vertex_count() << " edges " << graph.edge_count()
        << " mismatches " << mismatches << '\n';
  });
  return mismatches ? kExitMismatch : kExitOk;
}

int cmd_bench(const Options& o) {
  const CsrGraph graph = obtain_graph(o);
  BenchOptions options;
  options.source_counts = o.source_counts;
  options.repetitions = o.repetitions;
  options.engine = engine_config(o);
  const auto records = bench(graph, options);
  with_output(o, false, [&](std::ostream& out) { write_bench_report(records, out); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frontier-relaxation shortest paths over CSR graphs"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "Generate a random graph");
  gen->add_option("--vertices", o.vertices, "Vertex count")->capture_default_str();
  gen->add_option("--degree", o.degree, "Out-edges per vertex")->capture_default_str();
  gen->add_option("--max-weight", o.max_weight, "Largest weight")->capture_default_str();
  gen->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  gen->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "bin"}))
      ->capture_default_str();
  gen->add_option("--out", o.out, "Output file (default stdout)");

  auto* sssp = app.add_subcommand("sssp", "Single-source costs (first source)");
  add_graph_options(*sssp, o);
  add_source_options(*sssp, o);

  auto* apsp = app.add_subcommand("apsp", "Cost matrix, one row per source");
  add_graph_options(*apsp, o);
  add_source_options(*apsp, o);

  auto* path = app.add_subcommand("path", "Recover one shortest path");
  add_graph_options(*path, o);
  path->add_option("--source", o.source, "Path source")->capture_default_str();
  path->add_option("--dest", o.dest, "Path destination")->required();

  auto* verify = app.add_subcommand("verify", "Compare the engine against Dijkstra");
  add_graph_options(*verify, o);
  add_source_options(*verify, o);

  auto* bench_cmd = app.add_subcommand("bench", "Time APSP over several source counts");
  add_graph_options(*bench_cmd, o);
  bench_cmd->add_option("--source-counts", o.source_counts, "Source counts to time")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--repetitions", o.repetitions, "Runs per source count")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return e.get_exit_code() == 0 ? code : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*sssp) return cmd_sssp(o);
    if (*apsp) return cmd_apsp(o);
    if (*path) return cmd_path(o);
    if (*verify) return cmd_verify(o);
    if (*bench_cmd) return cmd_bench(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitParse;
  } catch (const InvalidGraph& e) {
    std::cerr << e.what() << '\n';
    return kExitParse;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "csrpath/apsp.hpp"
#include "csrpath/engine.hpp"
#include "csrpath/generator.hpp"
#include "csrpath/graph.hpp"
#include "csrpath/io.hpp"
#include "csrpath/oracle.hpp"
#include "csrpath/path.hpp"

namespace py = pybind11;
using namespace csrpath;

namespace {

template <class T>
py::array_t<T> to_numpy(std::span<const T> values) {
  py::array_t<T> out(static_cast<py::ssize_t>(values.size()));
  std::copy(values.begin(), values.end(), out.mutable_data());
  return out;
}

template <class T>
std::vector<T> to_vector(const py::array_t<T, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1) throw py::value_error("expected a one-dimensional array");
  return std::vector<T>(a.data(), a.data() + a.size());
}

GraphArrays make_arrays(const py::array_t<EdgeIndex, py::array::c_style | py::array::forcecast>& vertices,
                        const py::array_t<VertexId, py::array::c_style | py::array::forcecast>& edges,
                        const py::array_t<Cost, py::array::c_style | py::array::forcecast>& weights) {
  GraphArrays g;
  g.vertex_array = to_vector(vertices);
  g.edge_array = to_vector(edges);
  g.weight_array = to_vector(weights);
  g.vertex_count = g.vertex_array.size();
  g.edge_count = g.edge_array.size();
  return g;
}

EngineConfig engine_config(unsigned workers) {
  EngineConfig c;
  c.workers = workers;
  return c;
}

}  // namespace

PYBIND11_MODULE(_csrpath, m) {
  m.doc() = "Frontier-relaxation shortest paths over CSR graphs";
  m.attr("INF") = py::int_(kInf);

  py::register_exception<UnreachableError>(m, "UnreachableError", PyExc_LookupError);
  py::register_exception<InconsistentCostError>(m, "InconsistentCostError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<CsrGraph>(m, "Graph")
      .def(py::init([](const py::array_t<EdgeIndex, py::array::c_style | py::array::forcecast>& v,
                       const py::array_t<VertexId, py::array::c_style | py::array::forcecast>& e,
                       const py::array_t<Cost, py::array::c_style | py::array::forcecast>& w) {
             return CsrGraph(make_arrays(v, e, w));
           }),
           py::arg("vertex_array"), py::arg("edge_array"), py::arg("weight_array"))
      .def_property_readonly("vertex_count", &CsrGraph::vertex_count)
      .def_property_readonly("edge_count", &CsrGraph::edge_count)
      .def_property_readonly("vertex_array", [](const CsrGraph& g) { return to_numpy(g.vertex_array()); })
      .def_property_readonly("edge_array", [](const CsrGraph& g) { return to_numpy(g.edge_array()); })
      .def_property_readonly("weight_array", [](const CsrGraph& g) { return to_numpy(g.weight_array()); })
      .def("out_edge_range",
           [](const CsrGraph& g, VertexId v) {
             const EdgeRange r = g.out_edge_range(v);
             return py::make_tuple(r.begin, r.end);
           })
      .def("__eq__", [](const CsrGraph& a, const CsrGraph& b) { return a == b; })
      .def("__repr__", [](const CsrGraph& g) {
        return "<csrpath.Graph vertices=" + std::to_string(g.vertex_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("validate_graph",
        [](const py::array_t<EdgeIndex, py::array::c_style | py::array::forcecast>& v,
           const py::array_t<VertexId, py::array::c_style | py::array::forcecast>& e,
           const py::array_t<Cost, py::array::c_style | py::array::forcecast>& w) {
          std::vector<std::string> messages;
          for (const Violation& viol : validate_graph(make_arrays(v, e, w)).violations) {
            messages.push_back(viol.message());
          }
          return messages;
        },
        py::arg("vertex_array"), py::arg("edge_array"), py::arg("weight_array"),
        "List of invariant violations; empty when the arrays form a valid graph.");

  m.def("saturating_add", &saturating_add, py::arg("a"), py::arg("b"));

  m.def("generate_graph",
        [](std::uint64_t vertices, std::uint64_t degree, Cost max_weight, std::uint64_t seed) {
          return generate_graph({vertices, degree, max_weight, seed});
        },
        py::arg("vertices"), py::arg("degree"), py::arg("max_weight") = 100, py::arg("seed") = 1,
        py::call_guard<py::gil_scoped_release>());

  m.def("run_sssp",
        [](const CsrGraph& g, VertexId source, unsigned workers) {
          SsspResult r;
          {
            py::gil_scoped_release release;
            r = run_sssp(g, source, engine_config(workers));
          }
          py::dict stats;
          stats["iterations"] = r.stats.iterations;
          stats["relaxations"] = r.stats.relaxations;
          stats["wall_ms"] = r.stats.wall_ms;
          return py::make_tuple(to_numpy<Cost>(r.cost), stats);
        },
        py::arg("graph"), py::arg("source"), py::arg("workers") = 0,
        "Returns (costs, stats); unreachable vertices hold INF.");

  m.def("run_apsp",
        [](const CsrGraph& g, const std::vector<VertexId>& sources, unsigned workers,
           unsigned row_workers) {
          ApspResult r;
          {
            py::gil_scoped_release release;
            ApspConfig config;
            config.engine = engine_config(workers);
            config.row_workers = row_workers;
            r = run_apsp(g, sources, config);
          }
          py::array_t<Cost> out({static_cast<py::ssize_t>(r.row_count()),
                                 static_cast<py::ssize_t>(r.vertex_count)});
          std::copy(r.costs.begin(), r.costs.end(), out.mutable_data());
          return out;
        },
        py::arg("graph"), py::arg("sources"), py::arg("workers") = 0, py::arg("row_workers") = 1);

  m.def("dijkstra_reference",
        [](const CsrGraph& g, VertexId source) {
          return to_numpy<Cost>(dijkstra_reference(g, source));
        },
        py::arg("graph"), py::arg("source"));

  m.def("recover_path",
        [](const CsrGraph& g, const py::array_t<Cost, py::array::c_style | py::array::forcecast>& cost,
           VertexId source, VertexId dest) {
          return recover_path(g, to_vector(cost), source, dest);
        },
        py::arg("graph"), py::arg("costs"), py::arg("source"), py::arg("dest"));

  m.def("path_cost",
        [](const CsrGraph& g, const std::vector<VertexId>& path) { return path_cost(g, path); },
        py::arg("graph"), py::arg("path"));

  m.def("load_graph", [](const std::string& path) { return load_graph(path); }, py::arg("path"));
  m.def("save_graph",
        [](const CsrGraph& g, const std::string& path, const std::string& format) {
          save_graph(g, path, parse_graph_format(format));
        },
        py::arg("graph"), py::arg("path"), py::arg("format") = "text");

  m.def("cost_checksum",
        [](const py::array_t<Cost, py::array::c_style | py::array::forcecast>& cost) {
          return cost_checksum(std::span<const Cost>(cost.data(), static_cast<std::size_t>(cost.size())));
        },
        py::arg("costs"));
}

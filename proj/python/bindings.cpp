#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "indgap/classification.hpp"
#include "indgap/corpus.hpp"
#include "indgap/graph.hpp"
#include "indgap/graph6.hpp"
#include "indgap/oracle.hpp"
#include "indgap/recognition.hpp"

namespace py = pybind11;
using namespace indgap;

namespace {

std::vector<Vertex> ids(const VertexSet& s) { return s.ids(); }

std::vector<std::vector<Vertex>> id_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& s : sets) out.push_back(s.ids());
  return out;
}

OracleOptions budget(std::uint64_t nodes) { return OracleOptions{nodes}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Independence gap, vertex types and almost-well-covered recognition.";

  static py::exception<OutOfContract> out_of_contract(m, "OutOfContract", PyExc_ValueError);
  static py::exception<OracleBudgetExceeded> budget_exceeded(m, "OracleBudgetExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const OutOfContract& e) {
      py::set_error(out_of_contract, e.what());
    } catch (const OracleBudgetExceeded& e) {
      py::set_error(budget_exceeded, e.what());
    }
  });

  py::class_<Graph>(m, "Graph")
      .def(py::init<>())
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def("order", &Graph::order)
      .def("size", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (!g.valid(v)) throw py::index_error("vertex out of range");
        return g.neighbors(v);
      })
      .def("adjacent", [](const Graph& g, Vertex u, Vertex v) {
        if (!g.valid(u) || !g.valid(v)) throw py::index_error("vertex out of range");
        return g.adjacent(u, v);
      })
      .def("__len__", &Graph::order)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("parse_graph6", [](const std::string& word) { return parse_graph6(word); }, py::arg("word"));
  m.def("encode_graph6", &encode_graph6, py::arg("graph"));
  m.def("family", &family, py::arg("name"), py::arg("n") = 0);
  m.def("canonical_form", &canonical_form, py::arg("graph"));

  m.def(
      "girth",
      [](const Graph& g) -> std::optional<std::size_t> { return girth(g).length; }, py::arg("graph"),
      "Shortest cycle length, or None for forests.");
  m.def(
      "components", [](const Graph& g) { return id_lists(components(g).blocks); }, py::arg("graph"));

  py::class_<IndependenceReport>(m, "IndependenceReport")
      .def_readonly("alpha", &IndependenceReport::alpha)
      .def_readonly("imin", &IndependenceReport::imin)
      .def_readonly("gap", &IndependenceReport::gap)
      .def_property_readonly("alpha_witness", [](const IndependenceReport& r) { return ids(r.alpha_witness); })
      .def_property_readonly("imin_witness", [](const IndependenceReport& r) { return ids(r.imin_witness); })
      .def("__repr__", [](const IndependenceReport& r) {
        return "IndependenceReport(alpha=" + std::to_string(r.alpha) + ", imin=" + std::to_string(r.imin) +
               ", gap=" + std::to_string(r.gap) + ")";
      });

  m.def(
      "independence_report",
      [](const Graph& g, std::uint64_t nodes) {
        py::gil_scoped_release release;
        return independence_report(g, budget(nodes));
      },
      py::arg("graph"), py::arg("node_budget") = kDefaultNodeBudget);
  m.def(
      "gap_class", [](const Graph& g) { return std::string(to_string(gap_class(g).gap_class)); }, py::arg("graph"));
  m.def(
      "maximal_independent_sets",
      [](const Graph& g, std::size_t limit) { return id_lists(enumerate_maximal_independent_sets(g, limit).sets); },
      py::arg("graph"), py::arg("limit") = std::numeric_limits<std::size_t>::max());

  py::class_<Classification>(m, "Classification")
      .def_property_readonly("u", [](const Classification& c) { return ids(c.u); })
      .def_property_readonly("leaves", [](const Classification& c) { return ids(c.leaves); })
      .def_property_readonly("internal", [](const Classification& c) { return ids(c.internal); })
      .def_property_readonly("g0", [](const Classification& c) { return ids(c.g0); })
      .def_property_readonly("g1", [](const Classification& c) { return ids(c.g1); })
      .def_property_readonly("g2", [](const Classification& c) { return ids(c.g2); })
      .def_readonly("n0", &Classification::n0)
      .def_property_readonly("max_type",
                             [](const Classification& c) -> std::optional<int> {
                               if (c.max_type < 0) return std::nullopt;
                               return c.max_type;
                             })
      .def("type_of", &Classification::type_of, py::arg("v"));

  m.def("classify", &classify, py::arg("graph"));
  m.def("is_well_covered_girth6", &is_well_covered_girth6, py::arg("graph"));

  py::class_<Decision>(m, "Decision")
      .def_property_readonly("answer", [](const Decision& d) { return std::string(to_string(d.answer)); })
      .def_property_readonly("reason", [](const Decision& d) { return std::string(to_string(d.reason)); })
      .def_property_readonly("witness", [](const Decision& d) { return id_lists(d.witness); })
      .def_readonly("min_deficit", &Decision::min_deficit)
      .def_readonly("detail", &Decision::detail)
      .def_property_readonly("awc", &Decision::yes)
      .def("__bool__", &Decision::yes);

  m.def(
      "recognize",
      [](const Graph& g, std::size_t crosscheck_n, std::uint64_t nodes) {
        RecognizeOptions opts;
        opts.crosscheck_n = crosscheck_n;
        opts.oracle = budget(nodes);
        py::gil_scoped_release release;
        return recognize(g, opts);
      },
      py::arg("graph"), py::arg("crosscheck_n") = 0, py::arg("node_budget") = kDefaultNodeBudget);

  m.def(
      "exhaustive",
      [](std::size_t n_max, std::size_t girth_floor, std::vector<std::size_t> forbid, bool connected,
         std::size_t n_min) { return exhaustive({n_max, girth_floor, std::move(forbid), connected, n_min}); },
      py::arg("n_max"), py::arg("girth_floor") = 3, py::arg("forbid") = std::vector<std::size_t>{},
      py::arg("connected") = false, py::arg("n_min") = 1);
  m.def("random_girth_graph", &random_girth_graph, py::arg("n"), py::arg("girth_floor"),
        py::arg("forbid") = std::vector<std::size_t>{}, py::arg("edge_budget") = 0, py::arg("seed") = 0);
}

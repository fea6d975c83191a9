#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "sepsys/bipartite.hpp"
#include "sepsys/blowup.hpp"
#include "sepsys/cycles.hpp"
#include "sepsys/family.hpp"
#include "sepsys/generators.hpp"
#include "sepsys/graph.hpp"
#include "sepsys/pipeline.hpp"
#include "sepsys/tutte.hpp"

namespace py = pybind11;
using namespace sepsys;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  for (auto [u, v] : edges) es.push_back({u, v});
  return Graph(n, std::move(es));
}

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

py::tuple verdict(const SeparationVerdict& v) {
  if (v.failing_pair) return py::make_tuple(v.ok, py::make_tuple(v.failing_pair->first, v.failing_pair->second));
  return py::make_tuple(v.ok, py::none());
}

Bitset ground_of(const Graph& g, const std::optional<std::vector<EdgeId>>& ground) {
  return ground ? make_edge_set(static_cast<std::size_t>(g.num_edges()), *ground) : all_edges(g);
}

std::vector<std::vector<std::size_t>> member_edges(const SeparatingFamily& f) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& m : f.members()) out.push_back(m.edges.to_indices());
  return out;
}

std::vector<std::string> member_kinds(const SeparatingFamily& f) {
  std::vector<std::string> out;
  for (const auto& m : f.members())
    out.push_back(std::visit(
        [](const auto& d) -> std::string {
          using T = std::decay_t<decltype(d)>;
          if constexpr (std::is_same_v<T, SingleEdge>) return "edge";
          else if constexpr (std::is_same_v<T, SubdivisionCert>) return "cert";
          else if constexpr (std::is_same_v<T, BicliqueSides>) return "biclique";
          else return "edge_set";
        },
        m.data));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Separating path systems: constructions and exact verifiers";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"))
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def("edges", &edge_pairs)
      .def("edge_id", &Graph::edge_id, py::arg("u"), py::arg("v"))
      .def("to_text", &format_edge_list)
      .def_static("from_text", py::overload_cast<const std::string&>(&parse_edge_list), py::arg("text"))
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.num_vertices()) + ", m=" + std::to_string(g.num_edges()) + ")";
      });

  py::class_<SeparatingFamily>(m, "Family")
      .def("__len__", &SeparatingFamily::size)
      .def("members", &member_edges, "Edge ids of each member")
      .def("kinds", &member_kinds)
      .def_property_readonly("certs", &SeparatingFamily::count_certs)
      .def_readonly("metadata", &SeparatingFamily::metadata)
      .def("to_text", [](const SeparatingFamily& f) { return format_family(f).family; });

  m.def("complete", &gen::complete, py::arg("n"));
  m.def("cycle", &gen::cycle, py::arg("n"));
  m.def("path", &gen::path, py::arg("n"));
  m.def("complete_bipartite", &gen::complete_bipartite, py::arg("a"), py::arg("b"));
  m.def("prism", &gen::prism);
  m.def("petersen", &gen::petersen);
  m.def("theta", &gen::theta);
  m.def("two_triangles", &gen::two_triangles);
  m.def("random_connected", &gen::random_connected, py::arg("n"), py::arg("p"), py::arg("seed") = 0);

  m.def(
      "check_strong", [](const Graph& g, const SeparatingFamily& f, std::optional<std::vector<EdgeId>> ground) {
        return verdict(check_strong_separation(ground_of(g, ground), f));
      },
      py::arg("g"), py::arg("family"), py::arg("ground") = py::none(),
      "Returns (ok, failing_pair); the pair is ordered (e, f) with every member containing e also containing f.");
  m.def(
      "check_weak", [](const Graph& g, const SeparatingFamily& f, std::optional<std::vector<EdgeId>> ground) {
        return verdict(check_weak_separation(ground_of(g, ground), f));
      },
      py::arg("g"), py::arg("family"), py::arg("ground") = py::none());

  m.def(
      "tutte", [](const Graph& g) {
        auto d = build_tutte(g);
        auto v = verify_tutte(g, d);
        py::list bags;
        for (const auto& b : d.bags) {
          py::dict x;
          x["vertices"] = b.vertices;
          x["kind"] = to_string(b.kind);
          x["parent"] = b.parent;
          x["adhesion"] = b.adhesion;
          bags.append(x);
        }
        py::dict out;
        out["bags"] = bags;
        out["ok"] = v.ok;
        out["clause"] = v.clause;
        out["text"] = format_tutte(d);
        return out;
      },
      py::arg("g"), "Tutte decomposition of a connected graph with its verification verdict.");

  m.def(
      "separate", [](const Graph& g, const Graph& h, std::uint64_t budget, std::optional<double> c_balance) {
        PipelineConfig cfg;
        cfg.budget = budget;
        if (c_balance) {
          cfg.c_balance = *c_balance;
          cfg.degree_gate = true;
        }
        py::gil_scoped_release release;
        return separate_graph(g, h, cfg).family;
      },
      py::arg("g"), py::arg("h"), py::arg("budget") = 2'000'000, py::arg("c_balance") = py::none(),
      "Strongly separating family of a connected graph built from subdivisions of h.");

  m.def("sub_k3_system", [](const Graph& g) { return build_sub_k3_system(g, all_edges(g)); }, py::arg("g"));
  m.def("knn_system", &build_knn_system, py::arg("n"));
  m.def("biclique_system", &build_biclique_separating_system, py::arg("g"), py::arg("s_min") = 2);

  m.def(
      "constraint_family",
      [](int universe, const std::vector<std::pair<std::vector<int>, std::vector<int>>>& cs, std::uint64_t seed) {
        std::vector<Constraint> constraints;
        for (const auto& [inc, exc] : cs) constraints.push_back({inc, exc});
        return build_constraint_family(universe, constraints, seed).sets;
      },
      py::arg("universe"), py::arg("constraints"), py::arg("seed") = 0,
      "Sets such that each (include, exclude) constraint has a member containing include and missing exclude.");

  m.def(
      "blowup_separator", [](const Graph& h, int n, std::uint64_t seed) {
        auto s = build_blowup_h_separator(h, n, seed);
        return py::make_tuple(s.blowup.host, s.family, s.tier);
      },
      py::arg("h"), py::arg("n"), py::arg("seed") = 0, "Returns (host, family, tier).");
  m.def(
      "check_h_separation", [](const Graph& g, const Graph& h, const SeparatingFamily& f) {
        auto v = check_h_separation(g, h, f);
        return py::make_tuple(v.ok, v.copies);
      },
      py::arg("g"), py::arg("h"), py::arg("family"));

#ifdef VERSION_INFO
  m.attr("__version__") = VERSION_INFO;
#else
  m.attr("__version__") = "dev";
#endif
}

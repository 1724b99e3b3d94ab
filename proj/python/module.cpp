#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "woideal/census.hpp"
#include "woideal/classification.hpp"
#include "woideal/covers.hpp"
#include "woideal/errors.hpp"
#include "woideal/graph.hpp"
#include "woideal/ideals.hpp"
#include "woideal/io.hpp"
#include "woideal/oracle.hpp"

namespace py = pybind11;
using namespace woideal;

namespace {

py::object to_python(const nlohmann::ordered_json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null:
      return py::none();
    case nlohmann::json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float:
      return py::float_(j.get<double>());
    case nlohmann::json::value_t::string:
      return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(to_python(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = to_python(value);
      return out;
    }
    default:
      return py::none();
  }
}

std::vector<std::string> names_of(const WeightedOrientedGraph& g, const std::vector<VertexId>& vs) {
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

std::vector<std::string> names_of(const WeightedOrientedGraph& g, VertexMask mask) {
  return names_of(g, members(mask));
}

WeightedOrientedGraph make_graph(const std::vector<std::pair<std::string, std::uint64_t>>& vertices,
                                 const std::vector<std::pair<std::string, std::string>>& arcs) {
  std::vector<VertexSpec> specs;
  for (const auto& [name, weight] : vertices) specs.push_back({name, weight});
  return WeightedOrientedGraph::build(std::move(specs), arcs);
}

py::dict oracle_dict(const WeightedOrientedGraph& g, bool force, std::optional<double> budget,
                     const std::string& field, std::size_t cap) {
  OracleOptions options;
  options.force = force;
  options.budget_seconds = budget;
  options.cap = cap;
  if (field == "F2")
    options.fields = {Field::F2};
  else if (field == "Q")
    options.fields = {Field::Q};
  else if (field != "both")
    throw InvalidInput("field must be F2, Q or both");
  OracleReport report;
  {
    py::gil_scoped_release release;
    report = oracle_verify(g, options);
  }
  return to_python(oracle_json(report));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Edge ideals of vertex-weighted oriented graphs";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<TimeoutError>(m, "TimeoutError", PyExc_TimeoutError);
  py::register_exception<InternalError>(m, "InternalError", PyExc_AssertionError);

  py::class_<WeightedOrientedGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("vertices"), py::arg("arcs"),
           "vertices: [(name, weight)], arcs: [(tail, head)]")
      .def_static("from_json", &parse_graph, py::arg("text"))
      .def_static(
          "load", [](const std::string& path) { return load_graph_document(path).graph; }, py::arg("path"))
      .def("to_json", [](const WeightedOrientedGraph& g) { return to_json(g).dump(); })
      .def_property_readonly("names",
                             [](const WeightedOrientedGraph& g) {
                               return std::vector<std::string>(g.names().begin(), g.names().end());
                             })
      .def_property_readonly("weights",
                             [](const WeightedOrientedGraph& g) {
                               return std::vector<Weight>(g.weights().begin(), g.weights().end());
                             })
      .def_property_readonly("arcs",
                             [](const WeightedOrientedGraph& g) {
                               std::vector<std::pair<std::string, std::string>> out;
                               for (const Arc& a : g.arcs()) out.emplace_back(g.name(a.tail), g.name(a.head));
                               return out;
                             })
      .def("__len__", &WeightedOrientedGraph::vertex_count)
      .def("__repr__", [](const WeightedOrientedGraph& g) {
        return "<Graph with " + std::to_string(g.vertex_count()) + " vertices and " + std::to_string(g.arc_count()) +
               " arcs>";
      });

  m.def(
      "is_chordal",
      [](const WeightedOrientedGraph& g) {
        const auto r = is_chordal(underlying(g));
        py::dict out;
        out["chordal"] = r.chordal;
        out["elimination_order"] = names_of(g, r.elimination_order);
        out["induced_cycle"] = names_of(g, r.induced_cycle);
        return out;
      },
      py::arg("graph"));

  m.def(
      "simplicial_analysis",
      [](const WeightedOrientedGraph& g) {
        const auto a = simplicial_analysis(underlying(g));
        py::dict out;
        out["simplicial_vertices"] = names_of(g, a.simplicial_vertices);
        std::vector<std::vector<std::string>> simplices;
        for (const auto& s : a.simplices) simplices.push_back(names_of(g, s));
        out["simplices"] = simplices;
        out["simplicial_graph"] = a.is_simplicial_graph;
        return out;
      },
      py::arg("graph"));

  m.def(
      "simplex_partition",
      [](const WeightedOrientedGraph& g) -> py::object {
        const auto r = simplex_partition(underlying(g));
        if (!r.partition) return py::none();
        std::vector<std::vector<std::string>> blocks;
        for (const auto& b : r.partition->blocks) blocks.push_back(names_of(g, b));
        return py::cast(blocks);
      },
      py::arg("graph"));

  m.def(
      "minimal_vertex_covers",
      [](const WeightedOrientedGraph& g, std::size_t cap) {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : minimal_vertex_covers(underlying(g), cap)) out.push_back(names_of(g, c.members));
        return out;
      },
      py::arg("graph"), py::arg("cap") = kDefaultExactCap);

  m.def(
      "strong_vertex_covers",
      [](const WeightedOrientedGraph& g, std::size_t cap) {
        py::list out;
        for (const auto& p : strong_vertex_covers(g, cap)) out.append(to_python(partition_json(g, p)));
        return out;
      },
      py::arg("graph"), py::arg("cap") = kDefaultExactCap);

  m.def(
      "edge_ideal", [](const WeightedOrientedGraph& g) { return to_python(ideal_json(edge_ideal(g))); },
      py::arg("graph"));

  m.def(
      "primary_decomposition",
      [](const WeightedOrientedGraph& g, bool verify, std::size_t cap) {
        const auto comps = primary_decomposition(g, cap);
        std::optional<DecompositionCheck> check;
        if (verify) check = verify_decomposition(g, comps);
        return to_python(decomposition_json(g, comps, check));
      },
      py::arg("graph"), py::arg("verify") = true, py::arg("cap") = kDefaultExactCap);

  m.def(
      "is_unmixed", [](const WeightedOrientedGraph& g, std::size_t cap) { return is_unmixed(g, cap).unmixed; },
      py::arg("graph"), py::arg("cap") = kDefaultExactCap);

  m.def(
      "classify",
      [](const WeightedOrientedGraph& g, std::size_t cap) { return to_python(classification_json(g, classify(g, cap))); },
      py::arg("graph"), py::arg("cap") = kDefaultExactCap);

  m.def(
      "system_of_parameters",
      [](const WeightedOrientedGraph& g, std::size_t cap) {
        std::vector<std::string> out;
        for (const auto& h : system_of_parameters(g, cap)) out.push_back(to_string(h, g));
        return out;
      },
      py::arg("graph"), py::arg("cap") = kDefaultExactCap);

  m.def("oracle_verify", &oracle_dict, py::arg("graph"), py::arg("force") = false,
        py::arg("budget") = std::nullopt, py::arg("field") = "both", py::arg("cap") = kDefaultOracleCap);

  m.def(
      "census",
      [](std::size_t max_n, std::vector<std::uint64_t> weights, std::optional<std::uint64_t> seed, bool sampled,
         std::size_t samples, std::size_t threads) {
        CensusConfig config;
        config.max_n = max_n;
        config.weight_set = std::move(weights);
        config.seed = seed;
        config.mode = sampled ? OrientationMode::sampled : OrientationMode::exhaustive;
        config.samples = samples;
        config.threads = threads;
        config.validate();
        CensusReport report;
        {
          py::gil_scoped_release release;
          report = run_census(config);
        }
        return to_python(census_json(report));
      },
      py::arg("max_n") = 3, py::arg("weights") = std::vector<std::uint64_t>{1, 2}, py::arg("seed") = std::nullopt,
      py::arg("sampled") = false, py::arg("samples") = 16, py::arg("threads") = 1);
}

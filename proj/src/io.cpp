#include "woideal/io.hpp"

#include <fstream>
#include <sstream>

#include "woideal/errors.hpp"

namespace woideal {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string position(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw InvalidInput(where + ": missing \"" + key + "\"");
  return *it;
}

std::optional<std::string> optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw InvalidInput(std::string("metadata.") + key + " must be a string");
  return it->get<std::string>();
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput("malformed JSON at " + position(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("graph document must be a JSON object");

  const auto& vertices = require(doc, "vertices", "graph document");
  if (!vertices.is_array()) throw InvalidInput("\"vertices\" must be an array");
  std::vector<VertexSpec> specs;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto where = "vertices[" + std::to_string(i) + "]";
    const auto& v = vertices[i];
    if (!v.is_object()) throw InvalidInput(where + " must be an object");
    const auto& name = require(v, "name", where);
    if (!name.is_string()) throw InvalidInput(where + ".name must be a string");
    std::uint64_t weight = 1;
    if (auto w = v.find("weight"); w != v.end()) {
      if (!w->is_number_integer() || w->get<long long>() < 1)
        throw InvalidInput(where + " (" + name.get<std::string>() + "): weight must be a positive integer");
      weight = w->get<std::uint64_t>();
    }
    specs.push_back({name.get<std::string>(), weight});
  }

  std::vector<NamedArc> arcs;
  if (auto a = doc.find("arcs"); a != doc.end()) {
    if (!a->is_array()) throw InvalidInput("\"arcs\" must be an array");
    for (std::size_t i = 0; i < a->size(); ++i) {
      const auto& arc = (*a)[i];
      if (!arc.is_array() || arc.size() != 2 || !arc[0].is_string() || !arc[1].is_string())
        throw InvalidInput("arcs[" + std::to_string(i) + "] must be a [from, to] pair of vertex names");
      arcs.emplace_back(arc[0].get<std::string>(), arc[1].get<std::string>());
    }
  }

  GraphDocument out{WeightedOrientedGraph::build(std::move(specs), arcs), std::nullopt, std::nullopt};
  if (auto m = doc.find("metadata"); m != doc.end() && !m->is_null()) {
    if (!m->is_object()) throw InvalidInput("\"metadata\" must be an object");
    out.label = optional_string(*m, "label");
    out.source = optional_string(*m, "source");
  }
  return out;
}

WeightedOrientedGraph parse_graph(std::string_view text) { return parse_graph_document(text).graph; }

GraphDocument load_graph_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_graph_document(buffer.str());
  } catch (const InvalidInput& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

ordered_json to_json(const WeightedOrientedGraph& graph) {
  ordered_json doc;
  doc["vertices"] = ordered_json::array();
  for (VertexId v = 0; v < graph.vertex_count(); ++v)
    doc["vertices"].push_back({{"name", graph.name(v)}, {"weight", graph.weight(v)}});
  doc["arcs"] = ordered_json::array();
  for (const Arc& a : graph.arcs()) doc["arcs"].push_back({graph.name(a.tail), graph.name(a.head)});
  return doc;
}

ordered_json to_json(const GraphDocument& doc) {
  auto out = to_json(doc.graph);
  if (doc.label || doc.source) {
    ordered_json meta = ordered_json::object();
    if (doc.label) meta["label"] = *doc.label;
    if (doc.source) meta["source"] = *doc.source;
    out["metadata"] = std::move(meta);
  }
  return out;
}

ordered_json monomial_json(const Monomial& m, const Universe& universe) {
  ordered_json out = ordered_json::object();
  for (std::size_t v = 0; v < m.variables(); ++v)
    if (m[v] != 0) out[universe.at(v)] = m[v];
  return out;
}

ordered_json ideal_json(const MonomialIdeal& ideal) {
  ordered_json out = ordered_json::array();
  for (const auto& g : ideal.generators()) out.push_back(monomial_json(g, ideal.universe()));
  return out;
}

ordered_json vertex_list_json(const WeightedOrientedGraph& graph, VertexMask set) {
  ordered_json out = ordered_json::array();
  for (VertexId v : members(set)) out.push_back(graph.name(v));
  return out;
}

ordered_json partition_json(const WeightedOrientedGraph& graph, const CoverPartition& p) {
  return {{"cover", vertex_list_json(graph, p.cover)},
          {"L1", vertex_list_json(graph, p.l1)},
          {"L2", vertex_list_json(graph, p.l2)},
          {"L3", vertex_list_json(graph, p.l3)}};
}

namespace {

ordered_json names_json(const WeightedOrientedGraph& graph, std::span<const VertexId> vs) {
  ordered_json out = ordered_json::array();
  for (VertexId v : vs) out.push_back(graph.name(v));
  return out;
}

template <class T>
ordered_json optional_json(const std::optional<T>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

}  // namespace

ordered_json classification_json(const WeightedOrientedGraph& graph, const ClassificationReport& report) {
  ordered_json out;
  out["vertices"] = report.vertex_count;
  out["applicable"] = report.applicable;
  out["applicable_via"] = report.applicable_via;
  out["chordal"] = report.chordal;
  out["simplicial_graph"] = report.simplicial_graph;
  out["edgeless"] = report.edgeless;
  out["unmixed"] = report.unmixed;
  out["cohen_macaulay"] = optional_json(report.cohen_macaulay);
  out["gorenstein"] = optional_json(report.gorenstein);
  const auto& partition = report.simplex_partition.partition;
  out["m"] = partition ? ordered_json(partition->m()) : ordered_json(nullptr);
  out["height"] = report.height;
  out["dimension"] = report.dimension;
  if (partition) {
    ordered_json blocks = ordered_json::array();
    for (const auto& b : partition->blocks) blocks.push_back(names_json(graph, b));
    out["simplex_partition"] = std::move(blocks);
  } else {
    out["simplex_partition"] = nullptr;
  }
  if (report.parameters) {
    ordered_json forms = ordered_json::array();
    for (const auto& h : *report.parameters) forms.push_back(to_string(h, graph));
    out["parameters"] = std::move(forms);
  } else {
    out["parameters"] = nullptr;
  }

  ordered_json witnesses = ordered_json::object();
  if (report.chordal)
    witnesses["elimination_order"] = names_json(graph, report.chordality.elimination_order);
  else
    witnesses["induced_cycle"] = names_json(graph, report.chordality.induced_cycle);
  if (report.unmixed_detail.embedded_cover)
    witnesses["embedded_cover"] = partition_json(graph, *report.unmixed_detail.embedded_cover);
  if (report.unmixed_detail.unequal_minimal_covers) {
    const auto& [a, b] = *report.unmixed_detail.unequal_minimal_covers;
    witnesses["unequal_minimal_covers"] = {vertex_list_json(graph, a.members), vertex_list_json(graph, b.members)};
  }
  if (report.simplex_partition.witness) {
    witnesses["partition_witness"] = {{"vertex", graph.name(*report.simplex_partition.witness)},
                                      {"simplices", report.simplex_partition.witness_simplex_count}};
  }
  witnesses["minimal_cover_count"] = report.unmixed_detail.minimal_cover_count;
  witnesses["strong_cover_count"] = report.unmixed_detail.strong_cover_count;
  out["witnesses"] = std::move(witnesses);
  if (!report.applicable)
    out["note"] = "underlying graph is neither chordal nor simplicial; run the oracle command for a CM verdict";
  return out;
}

ordered_json oracle_json(const OracleReport& report) {
  ordered_json out;
  out["vertices"] = report.vertex_count;
  out["polarized_variables"] = report.polarized_variables;
  out["added_count"] = report.added_count;
  out["facet_count"] = report.facet_count;
  out["complex_dimension"] = report.complex_dimension;
  out["pure"] = report.pure;
  out["derived_dimension"] = report.derived_dimension;
  ordered_json fields = ordered_json::object();
  for (const auto& v : report.verdicts) {
    ordered_json f;
    f["cohen_macaulay"] = optional_json(v.cohen_macaulay);
    f["timed_out"] = v.timed_out;
    f["reduced_betti"] = v.homology ? ordered_json(v.homology->reduced_betti) : ordered_json(nullptr);
    fields[std::string(to_string(v.field))] = std::move(f);
  }
  out["fields"] = std::move(fields);
  out["fields_agree"] = report.fields_agree;
  if (report.classification) {
    const auto& c = *report.classification;
    out["classification"] = {{"applicable", c.applicable},
                             {"unmixed", c.unmixed},
                             {"cohen_macaulay", optional_json(c.cohen_macaulay)},
                             {"height", c.height},
                             {"purity_matches_unmixed", c.purity_matches_unmixed},
                             {"dimension_matches", c.dimension_matches},
                             {"cm_agrees", optional_json(c.cm_agrees)},
                             {"cm_implies_unmixed", c.cm_implies_unmixed}};
  } else {
    out["classification"] = nullptr;
  }
  out["mismatch"] = report.has_mismatch();
  out["timed_out"] = report.timed_out();
  out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

ordered_json decomposition_json(const WeightedOrientedGraph& graph, std::span<const IrreducibleComponent> components,
                                const std::optional<DecompositionCheck>& check) {
  ordered_json out;
  out["edge_ideal"] = ideal_json(edge_ideal(graph));
  ordered_json covers = ordered_json::array();
  ordered_json comps = ordered_json::array();
  for (const auto& c : components) {
    covers.push_back(partition_json(graph, c.cover));
    comps.push_back({{"cover", vertex_list_json(graph, c.cover.cover)}, {"generators", ideal_json(c.ideal)}});
  }
  out["strong_covers"] = std::move(covers);
  out["components"] = std::move(comps);
  if (check) {
    out["intersection"] = ideal_json(check->intersection);
    out["intersection_verified"] = check->matches_edge_ideal;
    out["redundant_components"] = check->redundant;
  } else {
    out["intersection"] = nullptr;
    out["intersection_verified"] = nullptr;
    out["redundant_components"] = nullptr;
  }
  return out;
}

}  // namespace woideal

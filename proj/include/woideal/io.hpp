#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <json.hpp>

#include "woideal/classification.hpp"
#include "woideal/graph.hpp"
#include "woideal/ideals.hpp"
#include "woideal/oracle.hpp"

namespace woideal {

struct GraphDocument {
  WeightedOrientedGraph graph;
  std::optional<std::string> label;
  std::optional<std::string> source;
};

/// Parses {"vertices":[{"name":..,"weight":..}],"arcs":[[from,to]],"metadata":{..}}.
/// A missing weight means 1; unknown top-level keys are ignored. Errors are
/// InvalidInput with a line/column position or the offending vertex/arc.
GraphDocument parse_graph_document(std::string_view text);
WeightedOrientedGraph parse_graph(std::string_view text);
GraphDocument load_graph_document(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const GraphDocument& doc);
nlohmann::ordered_json to_json(const WeightedOrientedGraph& graph);

/// Sparse exponent map, e.g. {"x2":1,"x3":2}.
nlohmann::ordered_json monomial_json(const Monomial& m, const Universe& universe);
nlohmann::ordered_json ideal_json(const MonomialIdeal& ideal);
nlohmann::ordered_json vertex_list_json(const WeightedOrientedGraph& graph, VertexMask set);
nlohmann::ordered_json partition_json(const WeightedOrientedGraph& graph, const CoverPartition& p);

nlohmann::ordered_json classification_json(const WeightedOrientedGraph& graph, const ClassificationReport& report);
nlohmann::ordered_json oracle_json(const OracleReport& report);

/// Strong covers, components Q_C, edge ideal and (optionally) the verified intersection.
nlohmann::ordered_json decomposition_json(const WeightedOrientedGraph& graph,
                                          std::span<const IrreducibleComponent> components,
                                          const std::optional<DecompositionCheck>& check);

}  // namespace woideal

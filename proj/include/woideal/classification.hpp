#pragma once

#include <optional>
#include <string>
#include <vector>

#include "woideal/graph.hpp"
#include "woideal/ideals.hpp"

namespace woideal {

/// h = sum of the listed variables.
struct LinearForm {
  std::vector<VertexId> vertices;
  friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

std::string to_string(const LinearForm& form, const WeightedOrientedGraph& graph);

struct ClassificationReport {
  std::size_t vertex_count = 0;
  bool chordal = false;
  bool simplicial_graph = false;
  /// Underlying graph chordal or simplicial.
  bool applicable = false;
  /// "chordal", "simplicial" or "none"; chordal wins when both hold.
  std::string applicable_via = "none";
  bool edgeless = false;

  bool unmixed = false;
  UnmixedResult unmixed_detail;
  /// Present iff applicable.
  std::optional<bool> cohen_macaulay;
  std::optional<bool> gorenstein;

  SimplexPartitionResult simplex_partition;
  std::size_t height = 0;
  std::size_t dimension = 0;
  /// Present iff applicable and unmixed.
  std::optional<std::vector<LinearForm>> parameters;

  ChordalityResult chordality;
};

/// Every vertex has degree <= 1: a disjoint union of single edges, plus isolated vertices.
bool is_disjoint_union_of_edges(const SimpleGraph& graph);

/// Cohen-Macaulay and Gorenstein verdicts for chordal or simplicial underlying
/// graphs; for any other graph those verdicts stay empty (use oracle_verify).
/// Throws InternalError when a structural consequence of unmixedness fails.
ClassificationReport classify(const WeightedOrientedGraph& graph, std::size_t cap = kDefaultExactCap);

/// h_i = sum of the vertices of the i-th simplex block. Throws PreconditionError
/// unless the graph is applicable and unmixed.
std::vector<LinearForm> system_of_parameters(const WeightedOrientedGraph& graph, std::size_t cap = kDefaultExactCap);

}  // namespace woideal

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "woideal/bits.hpp"

namespace woideal {

using Weight = std::uint32_t;

/// Largest accepted vertex weight; keeps every exponent comfortably inside 32 bits.
inline constexpr std::uint64_t kMaxWeight = std::uint64_t{1} << 30;

/// Directed edge tail -> head.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;
  friend bool operator==(const Arc&, const Arc&) = default;
};

struct VertexSpec {
  std::string name;
  std::uint64_t weight = 1;
};

using NamedArc = std::pair<std::string, std::string>;

/// A vertex-weighted oriented graph over a simple underlying graph.
///
/// Validated on construction: no loops, at most one arc per unordered pair,
/// weights >= 1, and every vertex of in-degree 0 carries weight 1. Immutable
/// afterwards; vertex order is the input order.
class WeightedOrientedGraph {
 public:
  WeightedOrientedGraph() = default;

  static WeightedOrientedGraph build(std::vector<VertexSpec> vertices, std::span<const NamedArc> arcs);
  static WeightedOrientedGraph from_indices(std::vector<std::string> names, std::vector<std::uint64_t> weights,
                                            std::vector<Arc> arcs);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const std::string> names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::span<const Weight> weights() const { return weights_; }
  Weight weight(VertexId v) const { return weights_.at(v); }
  std::span<const Arc> arcs() const { return arcs_; }
  std::span<const VertexId> out_neighbors(VertexId v) const { return out_.at(v); }
  std::span<const VertexId> in_neighbors(VertexId v) const { return in_.at(v); }
  std::optional<VertexId> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<Weight> weights_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<std::vector<VertexId>> in_;
};

/// Undirected simple graph. Neighbour lists are sorted by vertex order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::vector<std::string> names, std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const std::string> names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_.at(v); }
  std::size_t degree(VertexId v) const { return adjacency_.at(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;
  /// Edges as (u, v) with u < v, sorted.
  std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
};

SimpleGraph underlying(const WeightedOrientedGraph& graph);

struct ChordalityResult {
  bool chordal = false;
  /// Perfect elimination ordering (each vertex's later neighbours form a clique).
  std::vector<VertexId> elimination_order;
  /// Chordless cycle of length > 3, rotated to start at its smallest vertex.
  std::vector<VertexId> induced_cycle;
};

/// Visit order reversed, so the result is a candidate elimination ordering.
/// Ties go to the earliest vertex in input order.
std::vector<VertexId> maximum_cardinality_search(const SimpleGraph& graph);

bool is_perfect_elimination_ordering(const SimpleGraph& graph, std::span<const VertexId> order);

ChordalityResult is_chordal(const SimpleGraph& graph);

/// Some chordless cycle of length > 3, or empty if the graph is chordal.
std::vector<VertexId> find_induced_cycle(const SimpleGraph& graph);

bool is_clique(const SimpleGraph& graph, std::span<const VertexId> vertices);

bool is_simplicial_vertex(const SimpleGraph& graph, VertexId v);

struct SimplicialAnalysis {
  std::vector<VertexId> simplicial_vertices;
  /// Deduplicated closed neighbourhoods of simplicial vertices, each sorted,
  /// listed in lexicographic order.
  std::vector<std::vector<VertexId>> simplices;
  bool is_simplicial_graph = false;
};

SimplicialAnalysis simplicial_analysis(const SimpleGraph& graph);

struct SimplexPartition {
  std::vector<std::vector<VertexId>> blocks;
  std::size_t m() const { return blocks.size(); }
};

struct SimplexPartitionResult {
  std::optional<SimplexPartition> partition;
  /// First vertex lying in zero or in several simplices when there is no partition.
  std::optional<VertexId> witness;
  std::size_t witness_simplex_count = 0;
};

SimplexPartitionResult simplex_partition(const SimpleGraph& graph);

}  // namespace woideal

#pragma once

#include <cstddef>
#include <vector>

#include "woideal/bits.hpp"
#include "woideal/graph.hpp"

namespace woideal {

/// Default vertex cap for the exhaustive cover enumerations.
inline constexpr std::size_t kDefaultExactCap = 24;

struct VertexCover {
  VertexMask members = 0;
  std::size_t size() const { return cardinality(members); }
  friend bool operator==(const VertexCover&, const VertexCover&) = default;
};

/// A cover split by how its members see the outside:
/// L1 has an out-arc leaving C, L2 (not in L1) an in-arc entering from outside,
/// L3 the rest, i.e. members whose whole neighbourhood lies in C.
struct CoverPartition {
  VertexMask cover = 0;
  VertexMask l1 = 0;
  VertexMask l2 = 0;
  VertexMask l3 = 0;
  friend bool operator==(const CoverPartition&, const CoverPartition&) = default;
};

/// Per-vertex adjacency as bit masks; requires at most 64 vertices.
struct ArcMasks {
  explicit ArcMasks(const WeightedOrientedGraph& graph);
  std::size_t n = 0;
  std::vector<VertexMask> out;
  std::vector<VertexMask> in;
  std::vector<VertexMask> neighbors;
  /// Vertices with w != 1.
  VertexMask heavy = 0;
};

bool is_vertex_cover(const SimpleGraph& graph, VertexMask candidate);
bool is_minimal_vertex_cover(const SimpleGraph& graph, VertexMask candidate);

/// Inclusion-minimal covers, as complements of maximal independent sets
/// (Bron-Kerbosch with pivoting on the complement graph). Sorted by size,
/// then lexicographically. Throws CapacityError above `cap` vertices.
std::vector<VertexCover> minimal_vertex_covers(const SimpleGraph& graph, std::size_t cap = kDefaultExactCap);

/// Throws InvalidInput if `cover` is not a vertex cover.
CoverPartition cover_partition(const WeightedOrientedGraph& graph, VertexMask cover);

/// False for sets that are not vertex covers.
bool is_strong_cover(const WeightedOrientedGraph& graph, VertexMask cover);

enum class SweepOrder { forward, reverse };

/// All strong vertex covers with their partitions, by exhaustive search over
/// complements of independent sets. Output order is (size, lexicographic) and
/// does not depend on `order`.
std::vector<CoverPartition> strong_vertex_covers(const WeightedOrientedGraph& graph,
                                                 std::size_t cap = kDefaultExactCap,
                                                 SweepOrder order = SweepOrder::forward);

void check_exact_capacity(std::size_t vertex_count, std::size_t cap);

}  // namespace woideal

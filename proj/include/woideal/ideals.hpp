#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "woideal/covers.hpp"
#include "woideal/graph.hpp"
#include "woideal/monomial.hpp"

namespace woideal {

/// I(D) = < x_i * x_j^{w(x_j)} : (x_i, x_j) an arc >, over the graph's vertex universe.
MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph);

/// Q_C for a strong cover C: variables of L1 and w-th powers of L2 and L3.
struct IrreducibleComponent {
  CoverPartition cover;
  MonomialIdeal ideal;
};

/// Throws InvalidInput when the cover is not strong.
IrreducibleComponent irreducible_component(const WeightedOrientedGraph& graph, const CoverPartition& cover);

/// One component per strong cover, in strong-cover order. Irredundant as produced;
/// no minimalization pass is applied.
std::vector<IrreducibleComponent> primary_decomposition(const WeightedOrientedGraph& graph,
                                                        std::size_t cap = kDefaultExactCap);

struct DecompositionCheck {
  MonomialIdeal intersection;
  bool matches_edge_ideal = false;
  /// Indices of components whose removal leaves the intersection unchanged.
  std::vector<std::size_t> redundant;
};

/// Recomputes the intersection of the components and compares it with I(D).
/// The redundancy scan costs one extra intersection per component.
DecompositionCheck verify_decomposition(const WeightedOrientedGraph& graph,
                                        std::span<const IrreducibleComponent> components,
                                        bool check_redundancy = true);

struct UnmixedResult {
  bool unmixed = false;
  /// First strong cover with L3 non-empty (an embedded prime).
  std::optional<CoverPartition> embedded_cover;
  /// Two minimal covers of different sizes, if any.
  std::optional<std::pair<VertexCover, VertexCover>> unequal_minimal_covers;
  std::size_t minimal_cover_count = 0;
  std::size_t strong_cover_count = 0;
  /// Size of a smallest vertex cover, i.e. the height of I(D).
  std::size_t height = 0;
};

/// Unmixed iff all minimal covers have one size and no strong cover has L3 != {}.
/// Cross-checked against "all strong covers have one cardinality"; a disagreement
/// throws InternalError.
UnmixedResult is_unmixed(const WeightedOrientedGraph& graph, std::size_t cap = kDefaultExactCap);

}  // namespace woideal

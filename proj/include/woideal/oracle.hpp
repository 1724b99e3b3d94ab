#pragma once

#include <optional>
#include <vector>

#include "woideal/complex.hpp"
#include "woideal/covers.hpp"
#include "woideal/graph.hpp"
#include "woideal/monomial.hpp"

namespace woideal {

/// Square-free image of a monomial ideal. Vertex x with family size k becomes
/// x, x#2, ..., x#k; x^e maps to the product of the first e of them.
struct PolarizedIdeal {
  MonomialIdeal ideal;
  /// variable_map[v] lists the polarized variables of original variable v.
  std::vector<std::vector<std::size_t>> variable_map;
  std::size_t added_count = 0;
};

/// Family size of each variable is its largest exponent among the generators,
/// and at least 1 so that unused variables stay in the ring.
PolarizedIdeal polarize(const MonomialIdeal& ideal);

/// Collapses every family onto its first variable; inverts polarize().
MonomialIdeal depolarize(const PolarizedIdeal& polarized, const MonomialIdeal& original_shape);

/// Polarized variable count of I(D) without building it.
std::size_t polarized_variable_count(const WeightedOrientedGraph& graph);

/// Faces are the sets containing no generator support; facets are the
/// complements of the minimal transversals of the supports (Berge's algorithm).
/// Throws InvalidInput for a non-square-free or unit ideal.
SimplicialComplex stanley_reisner(const MonomialIdeal& ideal);

/// Minimal transversals of a hypergraph given by edge masks.
std::vector<VertexMask> minimal_transversals(std::vector<VertexMask> edges);

struct FieldVerdict {
  Field field = Field::F2;
  std::optional<bool> cohen_macaulay;
  std::optional<HomologyProfile> homology;
  bool timed_out = false;
};

struct OracleOptions {
  std::vector<Field> fields{Field::F2, Field::Q};
  std::size_t cap = kDefaultOracleCap;
  /// Lift the oracle cap (up to 64 polarized variables).
  bool force = false;
  std::optional<double> budget_seconds;
  /// Also run classify() and report agreement.
  bool compare_with_classification = true;
  std::size_t exact_cap = kDefaultExactCap;
  /// Skip the reduced homology of the whole complex (census fast path).
  bool whole_complex_homology = true;
};

struct OracleReport {
  std::size_t vertex_count = 0;
  std::size_t polarized_variables = 0;
  std::size_t added_count = 0;
  std::size_t facet_count = 0;
  int complex_dimension = -1;
  bool pure = false;
  /// dim R/I(D) = (complex dimension + 1) - added_count.
  long long derived_dimension = 0;
  std::vector<FieldVerdict> verdicts;
  /// All completed field verdicts coincide.
  bool fields_agree = true;

  struct Comparison {
    bool applicable = false;
    bool unmixed = false;
    std::optional<bool> cohen_macaulay;
    std::size_t height = 0;
    bool purity_matches_unmixed = false;
    bool dimension_matches = false;
    /// Empty when classify has no verdict or no field completed.
    std::optional<bool> cm_agrees;
    /// False when the oracle finds a Cohen-Macaulay ring for a mixed ideal.
    bool cm_implies_unmixed = true;
  };
  std::optional<Comparison> classification;

  double elapsed_seconds = 0.0;

  bool timed_out() const;
  /// Verdict shared by all completed fields, if any completed and they agree.
  std::optional<bool> cohen_macaulay() const;
  /// Any disagreement between fields or with the combinatorial side.
  bool has_mismatch() const;
};

/// edge_ideal -> polarize -> stanley_reisner -> Reisner criterion per field.
/// Throws CapacityError above the oracle cap unless forced; on budget exhaustion
/// the remaining field verdicts are left empty and marked timed out.
OracleReport oracle_verify(const WeightedOrientedGraph& graph, const OracleOptions& options = {});

}  // namespace woideal

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "woideal/covers.hpp"
#include "woideal/graph.hpp"
#include "woideal/io.hpp"

namespace woideal {

/// Largest n for which the census enumerates all graphs up to isomorphism.
inline constexpr std::size_t kExhaustiveGraphLimit = 6;

enum class OrientationMode { exhaustive, sampled };

struct CensusConfig {
  std::size_t min_n = 1;
  std::size_t max_n = 5;
  std::vector<std::uint64_t> weight_set{1, 2};
  OrientationMode mode = OrientationMode::exhaustive;
  std::optional<std::uint64_t> seed;
  /// Sampled mode: (orientation, weighting) draws per graph.
  std::size_t samples = 16;
  /// Random chordal graphs generated per n above kExhaustiveGraphLimit.
  std::size_t random_graphs = 8;
  std::optional<double> instance_budget_seconds;
  std::size_t exact_cap = kDefaultExactCap;
  std::size_t oracle_cap = kDefaultOracleCap;
  bool verify_decomposition = true;
  /// 0 = hardware concurrency. Does not affect the report.
  std::size_t threads = 0;

  /// Throws InvalidInput on an inconsistent configuration.
  void validate() const;
};

struct CensusCounts {
  std::uint64_t total = 0;
  std::uint64_t applicable = 0;
  std::uint64_t unmixed = 0;
  std::uint64_t cohen_macaulay = 0;
  std::uint64_t gorenstein = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_cohen_macaulay = 0;
  std::uint64_t oracle_pure = 0;
  std::uint64_t oracle_skipped_capacity = 0;
  std::uint64_t oracle_timeouts = 0;
  std::uint64_t decompositions_verified = 0;
  std::uint64_t cm_implies_unmixed_violations = 0;
  std::uint64_t gorenstein_violations = 0;
  std::uint64_t mismatches = 0;

  CensusCounts& operator+=(const CensusCounts& other);
};

struct CensusMismatch {
  /// cm_vs_oracle, field_disagreement, purity_vs_unmixed, dimension,
  /// cm_implies_unmixed, gorenstein, decomposition, radical or internal.
  std::string kind;
  std::string detail;
  GraphDocument instance;
};

struct CensusReport {
  CensusConfig config;
  /// graphs_per_n[k] = number of underlying graphs examined with k vertices.
  std::vector<std::size_t> graphs_per_n;
  CensusCounts counts;
  std::vector<CensusMismatch> mismatches;
};

/// Connected chordal graphs on n <= kExhaustiveGraphLimit vertices, one per
/// isomorphism class, named x1..xn. Sorted by edge count, then canonical code.
std::vector<SimpleGraph> connected_chordal_graphs(std::size_t n);

/// Connected chordal graphs built by attaching each new vertex to a random clique.
std::vector<SimpleGraph> random_chordal_graphs(std::size_t n, std::size_t count, std::uint64_t seed);

CensusReport run_census(const CensusConfig& config);

nlohmann::ordered_json census_json(const CensusReport& report);

/// Graph document plus "kind" and "detail"; replayable through the CLI.
nlohmann::ordered_json counterexample_json(const CensusMismatch& mismatch);

}  // namespace woideal

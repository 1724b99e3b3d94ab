#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "woideal/graph.hpp"

namespace woideal::testing {

/// Random legal instance: n in [1, max_n], either a random chordal graph or an
/// Erdos-Renyi graph, random orientation, weights from {1, 2, 3} off sources.
WeightedOrientedGraph random_instance(std::mt19937_64& rng, std::size_t max_n = 8);

/// Same vertices (names and weights travel with them) listed in another order.
WeightedOrientedGraph relabel(const WeightedOrientedGraph& g, const std::vector<VertexId>& order);

struct PropertyOutcome {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty() && checked > 0; }
};

/// Radical identity, minimal vs strong covers, L1/L2/L3 laws, boundary of a
/// boundary, Euler characteristics, relabeling invariance of classify and the
/// decomposition identity, each over `instances` random graphs, plus census
/// determinism for a fixed seed across thread counts.
std::vector<PropertyOutcome> run_structural_suite(std::size_t instances, std::uint64_t seed);

}  // namespace woideal::testing

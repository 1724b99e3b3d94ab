#include "woideal/ideals.hpp"

#include <algorithm>
#include <string>

#include "woideal/errors.hpp"

namespace woideal {

namespace {

std::shared_ptr<const Universe> universe_of(const WeightedOrientedGraph& graph) {
  return std::make_shared<const Universe>(graph.names().begin(), graph.names().end());
}

}  // namespace

MonomialIdeal edge_ideal(const WeightedOrientedGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<Monomial> gens;
  gens.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs())
    gens.push_back(Monomial::power(n, a.tail, 1) * Monomial::power(n, a.head, graph.weight(a.head)));
  return MonomialIdeal(universe_of(graph), std::move(gens));
}

IrreducibleComponent irreducible_component(const WeightedOrientedGraph& graph, const CoverPartition& cover) {
  if (cover_partition(graph, cover.cover) != cover) throw InvalidInput("cover partition is inconsistent with the graph");
  if (!is_strong_cover(graph, cover.cover)) {
    std::string names;
    for (VertexId v : members(cover.cover)) names += (names.empty() ? "" : ",") + graph.name(v);
    throw InvalidInput("cover {" + names + "} is not a strong vertex cover");
  }
  const std::size_t n = graph.vertex_count();
  std::vector<Monomial> gens;
  for (VertexId v : members(cover.l1)) gens.push_back(Monomial::power(n, v, 1));
  for (VertexId v : members(cover.l2 | cover.l3)) gens.push_back(Monomial::power(n, v, graph.weight(v)));
  return {cover, MonomialIdeal(universe_of(graph), std::move(gens))};
}

std::vector<IrreducibleComponent> primary_decomposition(const WeightedOrientedGraph& graph, std::size_t cap) {
  std::vector<IrreducibleComponent> out;
  for (const auto& cover : strong_vertex_covers(graph, cap)) out.push_back(irreducible_component(graph, cover));
  return out;
}

DecompositionCheck verify_decomposition(const WeightedOrientedGraph& graph,
                                        std::span<const IrreducibleComponent> components, bool check_redundancy) {
  const auto target = edge_ideal(graph);
  if (components.empty()) throw InvalidInput("empty decomposition");
  std::vector<MonomialIdeal> ideals;
  ideals.reserve(components.size());
  for (const auto& c : components) ideals.push_back(c.ideal);

  DecompositionCheck check{intersect(ideals), false, {}};
  check.matches_edge_ideal = check.intersection == target;
  if (!check_redundancy || ideals.size() < 2) return check;

  // prefix[i] = Q_0 ∩ ... ∩ Q_{i-1}; suffix[i] = Q_i ∩ ... ∩ Q_{k-1}
  const std::size_t k = ideals.size();
  std::vector<std::optional<MonomialIdeal>> prefix(k + 1), suffix(k + 1);
  for (std::size_t i = 1; i <= k; ++i)
    prefix[i] = prefix[i - 1] ? intersect(*prefix[i - 1], ideals[i - 1]) : ideals[i - 1];
  for (std::size_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] ? intersect(ideals[i], *suffix[i + 1]) : ideals[i];
  for (std::size_t i = 0; i < k; ++i) {
    const auto& before = prefix[i];
    const auto& after = suffix[i + 1];
    const MonomialIdeal others = before && after ? intersect(*before, *after) : before ? *before : *after;
    if (others == check.intersection) check.redundant.push_back(i);
  }
  return check;
}

UnmixedResult is_unmixed(const WeightedOrientedGraph& graph, std::size_t cap) {
  UnmixedResult result;
  const auto minimal = minimal_vertex_covers(underlying(graph), cap);
  const auto strong = strong_vertex_covers(graph, cap);
  result.minimal_cover_count = minimal.size();
  result.strong_cover_count = strong.size();
  result.height = minimal.front().size();  // sorted by size; never empty

  const auto different = std::find_if(minimal.begin(), minimal.end(),
                                      [&](const VertexCover& c) { return c.size() != minimal.front().size(); });
  if (different != minimal.end()) result.unequal_minimal_covers = std::make_pair(minimal.front(), *different);
  const auto embedded =
      std::find_if(strong.begin(), strong.end(), [](const CoverPartition& p) { return p.l3 != 0; });
  if (embedded != strong.end()) result.embedded_cover = *embedded;
  result.unmixed = !result.unequal_minimal_covers && !result.embedded_cover;

  const bool equal_cardinality = std::all_of(strong.begin(), strong.end(), [&](const CoverPartition& p) {
    return cardinality(p.cover) == cardinality(strong.front().cover);
  });
  if (equal_cardinality != result.unmixed)
    throw InternalError("unmixedness routes disagree: L3 criterion says " + std::string(result.unmixed ? "yes" : "no") +
                        ", strong-cover cardinalities say " + (equal_cardinality ? "yes" : "no"));
  return result;
}

}  // namespace woideal

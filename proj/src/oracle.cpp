#include "woideal/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "woideal/classification.hpp"
#include "woideal/errors.hpp"
#include "woideal/ideals.hpp"

namespace woideal {

PolarizedIdeal polarize(const MonomialIdeal& ideal) {
  const auto& universe = ideal.universe();
  const std::size_t n = universe.size();
  std::vector<Exponent> family(n, 1);
  for (const auto& g : ideal.generators())
    for (std::size_t v = 0; v < n; ++v) family[v] = std::max(family[v], g[v]);

  PolarizedIdeal out;
  Universe names;
  out.variable_map.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    for (Exponent k = 1; k <= family[v]; ++k) {
      out.variable_map[v].push_back(names.size());
      names.push_back(k == 1 ? universe[v] : universe[v] + "#" + std::to_string(k));
    }
  }
  out.added_count = names.size() - n;

  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> exps(names.size(), 0);
    for (std::size_t v = 0; v < n; ++v)
      for (Exponent k = 0; k < g[v]; ++k) exps[out.variable_map[v][k]] = 1;
    gens.emplace_back(std::move(exps));
  }
  out.ideal = MonomialIdeal(std::move(names), std::move(gens));
  return out;
}

MonomialIdeal depolarize(const PolarizedIdeal& polarized, const MonomialIdeal& original_shape) {
  const std::size_t n = polarized.variable_map.size();
  std::vector<std::size_t> owner(polarized.ideal.universe().size());
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t p : polarized.variable_map[v]) owner[p] = v;
  std::vector<Monomial> gens;
  for (const auto& g : polarized.ideal.generators()) {
    std::vector<Exponent> exps(n, 0);
    for (std::size_t p = 0; p < owner.size(); ++p) exps[owner[p]] += g[p];
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(original_shape.shared_universe(), std::move(gens));
}

std::size_t polarized_variable_count(const WeightedOrientedGraph& graph) {
  std::vector<Weight> family(graph.vertex_count(), 1);
  for (const Arc& a : graph.arcs()) family[a.head] = std::max(family[a.head], graph.weight(a.head));
  std::size_t total = 0;
  for (Weight w : family) total += w;
  return total;
}

std::vector<VertexMask> minimal_transversals(std::vector<VertexMask> edges) {
  std::sort(edges.begin(), edges.end(), size_lex_less);
  std::vector<VertexMask> current{0};
  for (VertexMask e : edges) {
    std::vector<VertexMask> next;
    for (VertexMask t : current) {
      if (t & e) {
        next.push_back(t);
        continue;
      }
      for (VertexId v : members(e)) next.push_back(t | bit(v));
    }
    std::sort(next.begin(), next.end(), size_lex_less);
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current.clear();
    for (VertexMask t : next)
      if (std::none_of(current.begin(), current.end(), [t](VertexMask k) { return (k & ~t) == 0; }))
        current.push_back(t);
  }
  return current;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (!ideal.is_square_free()) throw InvalidInput("Stanley-Reisner complex needs a square-free ideal");
  const std::size_t n = ideal.universe().size();
  if (n > kMaskBits) throw CapacityError("Stanley-Reisner complexes support at most 64 variables");
  std::vector<VertexMask> supports;
  for (const auto& g : ideal.generators()) {
    if (g.is_one()) throw InvalidInput("the unit ideal has the void complex");
    VertexMask s = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g[v]) s |= bit(v);
    supports.push_back(s);
  }
  std::vector<FaceMask> facets;
  for (VertexMask t : minimal_transversals(std::move(supports))) facets.push_back(full_mask(n) & ~t);
  return SimplicialComplex(ideal.universe(), std::move(facets));
}

bool OracleReport::timed_out() const {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const FieldVerdict& v) { return v.timed_out; });
}

std::optional<bool> OracleReport::cohen_macaulay() const {
  std::optional<bool> shared;
  for (const auto& v : verdicts) {
    if (!v.cohen_macaulay) continue;
    if (shared && *shared != *v.cohen_macaulay) return std::nullopt;
    shared = v.cohen_macaulay;
  }
  return shared;
}

bool OracleReport::has_mismatch() const {
  if (!fields_agree) return true;
  if (!classification) return false;
  return !classification->purity_matches_unmixed || !classification->dimension_matches ||
         !classification->cm_implies_unmixed ||
         (classification->cm_agrees && !*classification->cm_agrees);
}

OracleReport oracle_verify(const WeightedOrientedGraph& graph, const OracleOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const Deadline deadline = options.budget_seconds
                                ? Deadline::after(std::chrono::duration<double>(*options.budget_seconds))
                                : Deadline{};
  const std::size_t cap = options.force ? kMaskBits : options.cap;

  OracleReport report;
  report.vertex_count = graph.vertex_count();
  report.polarized_variables = polarized_variable_count(graph);
  if (report.polarized_variables > cap)
    throw CapacityError("polarized edge ideal has " + std::to_string(report.polarized_variables) +
                        " variables; oracle cap is " + std::to_string(cap) +
                        (options.force ? "" : " (use --force to lift it)"));

  const auto polarized = polarize(edge_ideal(graph));
  const auto complex = stanley_reisner(polarized.ideal);
  report.added_count = polarized.added_count;
  report.facet_count = complex.facets().size();
  report.complex_dimension = complex.dimension();
  report.pure = complex.is_pure();
  report.derived_dimension =
      static_cast<long long>(report.complex_dimension) + 1 - static_cast<long long>(report.added_count);

  for (Field field : options.fields) {
    FieldVerdict verdict{field, std::nullopt, std::nullopt, false};
    try {
      if (options.whole_complex_homology) verdict.homology = reduced_homology_ranks(complex, field, cap, deadline);
      verdict.cohen_macaulay = is_cm_reisner(complex, field, cap, deadline);
    } catch (const TimeoutError&) {
      verdict.timed_out = true;
    }
    report.verdicts.push_back(std::move(verdict));
  }
  std::optional<bool> first;
  for (const auto& v : report.verdicts) {
    if (!v.cohen_macaulay) continue;
    if (first && *first != *v.cohen_macaulay) report.fields_agree = false;
    first = v.cohen_macaulay;
  }

  if (options.compare_with_classification) {
    const auto c = classify(graph, options.exact_cap);
    OracleReport::Comparison cmp;
    cmp.applicable = c.applicable;
    cmp.unmixed = c.unmixed;
    cmp.cohen_macaulay = c.cohen_macaulay;
    cmp.height = c.height;
    cmp.purity_matches_unmixed = report.pure == c.unmixed;
    cmp.dimension_matches = report.derived_dimension == static_cast<long long>(graph.vertex_count() - c.height);
    if (c.cohen_macaulay && first) cmp.cm_agrees = *c.cohen_macaulay == *first;
    cmp.cm_implies_unmixed = !(first && *first && !c.unmixed);
    report.classification = cmp;
  }

  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace woideal

#include "woideal/census.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "woideal/classification.hpp"
#include "woideal/errors.hpp"
#include "woideal/ideals.hpp"
#include "woideal/oracle.hpp"

namespace woideal {

using nlohmann::ordered_json;

void CensusConfig::validate() const {
  if (min_n < 1 || min_n > max_n) throw InvalidInput("census needs 1 <= min_n <= max_n");
  if (max_n > exact_cap) throw InvalidInput("census max_n exceeds the exact-mode cap");
  if (max_n > kMaskBits) throw InvalidInput("census max_n exceeds 64");
  if (weight_set.empty()) throw InvalidInput("census weight set is empty");
  for (auto w : weight_set)
    if (w < 1 || w > kMaxWeight) throw InvalidInput("census weights must lie in [1, 2^30]");
  if (mode == OrientationMode::sampled && !seed) throw InvalidInput("sampled census mode requires a seed");
  if (max_n > kExhaustiveGraphLimit && !seed)
    throw InvalidInput("census beyond n = 6 uses random chordal graphs and requires a seed");
  if (mode == OrientationMode::sampled && samples == 0) throw InvalidInput("sampled census needs samples >= 1");
}

CensusCounts& CensusCounts::operator+=(const CensusCounts& o) {
  total += o.total;
  applicable += o.applicable;
  unmixed += o.unmixed;
  cohen_macaulay += o.cohen_macaulay;
  gorenstein += o.gorenstein;
  oracle_checked += o.oracle_checked;
  oracle_cohen_macaulay += o.oracle_cohen_macaulay;
  oracle_pure += o.oracle_pure;
  oracle_skipped_capacity += o.oracle_skipped_capacity;
  oracle_timeouts += o.oracle_timeouts;
  decompositions_verified += o.decompositions_verified;
  cm_implies_unmixed_violations += o.cm_implies_unmixed_violations;
  gorenstein_violations += o.gorenstein_violations;
  mismatches += o.mismatches;
  return *this;
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

using PairList = std::vector<std::pair<VertexId, VertexId>>;

PairList all_pairs(std::size_t n) {
  PairList pairs;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

bool connected(std::size_t n, const std::vector<VertexMask>& adj) {
  if (n == 0) return true;
  VertexMask reached = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexId v : members(frontier)) next |= adj[v];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == full_mask(n);
}

std::uint32_t canonical_code(std::size_t n, const PairList& pairs, const std::vector<VertexMask>& adj) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint32_t best = ~std::uint32_t{0};
  do {
    std::uint32_t code = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if (has(adj[perm[pairs[p].first]], perm[pairs[p].second])) code |= std::uint32_t{1} << p;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

SimpleGraph graph_from_code(std::size_t n, const PairList& pairs, std::uint32_t code) {
  PairList edges;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if ((code >> p) & 1U) edges.push_back(pairs[p]);
  return SimpleGraph(default_names(n), edges);
}

// Components of size <= 2, computed without looking at degrees.
bool components_are_edges_or_points(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : g.edges()) parent[find(u)] = find(v);
  std::vector<std::size_t> size(n, 0);
  for (std::size_t v = 0; v < n; ++v) ++size[find(v)];
  return std::all_of(size.begin(), size.end(), [](std::size_t s) { return s <= 2; });
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct WorkItem {
  std::size_t graph = 0;
  std::uint64_t orientation = 0;
  /// Empty: enumerate every legal weighting.
  std::vector<std::uint64_t> weights;
};

struct Outcome {
  CensusCounts counts;
  std::vector<CensusMismatch> mismatches;
};

class InstanceChecker {
 public:
  InstanceChecker(const CensusConfig& config, Outcome& out) : config_(config), out_(out) {}

  void check(const WeightedOrientedGraph& d, std::string label) {
    ++out_.counts.total;
    label_ = std::move(label);
    current_ = &d;
    try {
      run(d);
    } catch (const InternalError& e) {
      flag("internal", e.what());
    }
  }

 private:
  void flag(std::string kind, std::string detail) {
    ++out_.counts.mismatches;
    out_.mismatches.push_back({std::move(kind), std::move(detail), {*current_, label_, "census"}});
  }

  void run(const WeightedOrientedGraph& d) {
    const std::size_t n = d.vertex_count();
    const auto ideal = edge_ideal(d);
    const auto g = underlying(d);

    std::vector<std::uint64_t> ones(n, 1);
    std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
    const auto plain = WeightedOrientedGraph::from_indices({d.names().begin(), d.names().end()}, ones, arcs);
    if (radical(ideal) != edge_ideal(plain)) flag("radical", "radical of I(D) differs from I(G)");

    const auto report = classify(d, config_.exact_cap);
    auto& c = out_.counts;
    c.applicable += report.applicable;
    c.unmixed += report.unmixed;
    c.cohen_macaulay += report.cohen_macaulay.value_or(false);
    c.gorenstein += report.gorenstein.value_or(false);

    const bool gorenstein = report.gorenstein.value_or(false);
    if (report.applicable && gorenstein != components_are_edges_or_points(g)) {
      ++c.gorenstein_violations;
      flag("gorenstein", "Gorenstein verdict differs from the disjoint-union-of-edges test");
    }
    if (gorenstein && ideal.generator_count() != report.height) {
      ++c.gorenstein_violations;
      flag("gorenstein", "Gorenstein instance is not a complete intersection (generators " +
                             std::to_string(ideal.generator_count()) + ", height " + std::to_string(report.height) +
                             ")");
    }

    if (config_.verify_decomposition) {
      const auto components = primary_decomposition(d, config_.exact_cap);
      const auto check = verify_decomposition(d, components);
      if (!check.matches_edge_ideal) flag("decomposition", "intersection of components differs from I(D)");
      if (!check.redundant.empty()) flag("decomposition", "decomposition has redundant components");
      if (check.matches_edge_ideal && check.redundant.empty()) ++c.decompositions_verified;
    }

    if (polarized_variable_count(d) > config_.oracle_cap) {
      ++c.oracle_skipped_capacity;
      return;
    }
    OracleOptions options;
    options.cap = config_.oracle_cap;
    options.budget_seconds = config_.instance_budget_seconds;
    options.compare_with_classification = false;
    options.whole_complex_homology = false;
    const auto oracle = oracle_verify(d, options);
    if (oracle.timed_out()) {
      ++c.oracle_timeouts;
      return;
    }
    ++c.oracle_checked;
    c.oracle_pure += oracle.pure;
    if (!oracle.fields_agree) flag("field_disagreement", "Reisner verdicts over F2 and Q differ");
    const auto cm = oracle.cohen_macaulay();
    c.oracle_cohen_macaulay += cm.value_or(false);
    if (report.cohen_macaulay && cm && *report.cohen_macaulay != *cm)
      flag("cm_vs_oracle", std::string("classify says ") + (*report.cohen_macaulay ? "CM" : "not CM") +
                               ", Reisner says " + (*cm ? "CM" : "not CM"));
    if (oracle.pure != report.unmixed)
      flag("purity_vs_unmixed", std::string("complex ") + (oracle.pure ? "pure" : "not pure") + ", ideal " +
                                    (report.unmixed ? "unmixed" : "mixed"));
    if (oracle.derived_dimension != static_cast<long long>(n - report.height))
      flag("dimension", "oracle dimension " + std::to_string(oracle.derived_dimension) + " vs " +
                            std::to_string(n - report.height));
    if (cm.value_or(false) && !report.unmixed) {
      ++c.cm_implies_unmixed_violations;
      flag("cm_implies_unmixed", "Reisner says CM but the ideal is mixed");
    }
    if (gorenstein && !cm.value_or(false)) {
      ++c.gorenstein_violations;
      flag("gorenstein", "Gorenstein instance is not CM according to the oracle");
    }
  }

  const CensusConfig& config_;
  Outcome& out_;
  std::string label_;
  const WeightedOrientedGraph* current_ = nullptr;
};

struct GraphEntry {
  std::size_t n = 0;
  SimpleGraph graph;
};

void process(const CensusConfig& config, const GraphEntry& entry, std::size_t graph_index, const WorkItem& item,
             Outcome& out) {
  const auto& g = entry.graph;
  const std::size_t n = g.vertex_count();
  std::vector<Arc> arcs;
  std::vector<bool> source(n, true);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [u, v] = g.edges()[e];
    if ((item.orientation >> e) & 1U) std::swap(u, v);
    arcs.push_back({u, v});
    source[v] = false;
  }
  std::vector<std::string> names(g.names().begin(), g.names().end());
  const std::string base = "census n=" + std::to_string(n) + " graph=" + std::to_string(graph_index) +
                           " orientation=" + std::to_string(item.orientation);
  InstanceChecker checker(config, out);

  auto run_one = [&](const std::vector<std::uint64_t>& weights) {
    std::string label = base + " weights=";
    for (std::size_t v = 0; v < n; ++v) label += (v ? "," : "") + std::to_string(weights[v]);
    checker.check(WeightedOrientedGraph::from_indices(names, weights, arcs), std::move(label));
  };

  if (!item.weights.empty()) {
    run_one(item.weights);
    return;
  }
  // Odometer over weight_set on non-source vertices.
  std::vector<std::size_t> digit(n, 0);
  std::vector<std::uint64_t> weights(n, 1);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) weights[v] = source[v] ? 1 : config.weight_set[digit[v]];
    run_one(weights);
    std::size_t v = 0;
    for (; v < n; ++v) {
      if (source[v]) continue;
      if (++digit[v] < config.weight_set.size()) break;
      digit[v] = 0;
    }
    if (v == n) break;
  }
}

}  // namespace

std::vector<SimpleGraph> connected_chordal_graphs(std::size_t n) {
  if (n > kExhaustiveGraphLimit) throw CapacityError("exhaustive graph enumeration supports n <= 6");
  const auto pairs = all_pairs(n);
  std::set<std::pair<std::size_t, std::uint32_t>> seen;  // (edge count, canonical code)
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << pairs.size()); ++code) {
    std::vector<VertexMask> adj(n, 0);
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((code >> p) & 1U) {
        adj[pairs[p].first] |= bit(pairs[p].second);
        adj[pairs[p].second] |= bit(pairs[p].first);
      }
    if (!connected(n, adj)) continue;
    const auto canonical = canonical_code(n, pairs, adj);
    if (canonical != code) continue;  // keep only the canonical labelling
    if (!is_chordal(graph_from_code(n, pairs, code)).chordal) continue;
    seen.emplace(static_cast<std::size_t>(std::popcount(code)), code);
  }
  std::vector<SimpleGraph> out;
  for (const auto& [edges, code] : seen) out.push_back(graph_from_code(n, pairs, code));
  return out;
}

std::vector<SimpleGraph> random_chordal_graphs(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::vector<SimpleGraph> out;
  std::mt19937_64 rng(mix(seed ^ mix(n)));
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<VertexMask> adj(n, 0);
    PairList edges;
    for (VertexId v = 1; v < n; ++v) {
      const VertexId anchor = rng() % v;
      VertexMask clique = bit(anchor);
      auto candidates = members(adj[anchor]);
      for (std::size_t i = candidates.size(); i > 1; --i) std::swap(candidates[i - 1], candidates[rng() % i]);
      for (VertexId w : candidates)
        if ((rng() & 1U) && (adj[w] & clique) == clique) clique |= bit(w);
      for (VertexId w : members(clique)) {
        adj[w] |= bit(v);
        adj[v] |= bit(w);
        edges.emplace_back(w, v);
      }
    }
    out.emplace_back(default_names(n), edges);
  }
  return out;
}

CensusReport run_census(const CensusConfig& config) {
  config.validate();
  CensusReport report;
  report.config = config;
  report.graphs_per_n.assign(config.max_n + 1, 0);

  std::vector<GraphEntry> graphs;
  for (std::size_t n = config.min_n; n <= config.max_n; ++n) {
    auto batch = n <= kExhaustiveGraphLimit ? connected_chordal_graphs(n)
                                            : random_chordal_graphs(n, config.random_graphs, *config.seed);
    report.graphs_per_n[n] = batch.size();
    for (auto& g : batch) graphs.push_back({n, std::move(g)});
  }

  std::vector<std::pair<std::size_t, WorkItem>> items;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& g = graphs[gi].graph;
    const std::size_t edges = g.edge_count();
    if (config.mode == OrientationMode::exhaustive) {
      if (edges >= 32) throw CapacityError("exhaustive orientations need fewer than 32 edges; use sampled mode");
      for (std::uint64_t o = 0; o < (std::uint64_t{1} << edges); ++o) items.push_back({gi, {gi, o, {}}});
      continue;
    }
    std::mt19937_64 rng(mix(*config.seed ^ mix(gi + 1)));
    for (std::size_t s = 0; s < config.samples; ++s) {
      WorkItem item{gi, edges == 0 ? 0 : rng() & (edges >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << edges) - 1),
                    {}};
      std::vector<bool> source(g.vertex_count(), true);
      for (std::size_t e = 0; e < edges; ++e) {
        auto [u, v] = g.edges()[e];
        source[(item.orientation >> e) & 1U ? u : v] = false;
      }
      for (std::size_t v = 0; v < g.vertex_count(); ++v)
        item.weights.push_back(source[v] ? 1 : config.weight_set[rng() % config.weight_set.size()]);
      items.push_back({gi, std::move(item)});
    }
  }

  std::vector<Outcome> outcomes(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      const auto& [gi, item] = items[i];
      process(config, graphs[gi], gi, item, outcomes[i]);
    }
  };
  std::size_t threads = config.threads ? config.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(items.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (auto& o : outcomes) {
    report.counts += o.counts;
    for (auto& m : o.mismatches) report.mismatches.push_back(std::move(m));
  }
  return report;
}

ordered_json census_json(const CensusReport& report) {
  const auto& cfg = report.config;
  ordered_json out;
  out["config"] = {{"min_n", cfg.min_n},
                   {"max_n", cfg.max_n},
                   {"weights", cfg.weight_set},
                   {"mode", cfg.mode == OrientationMode::exhaustive ? "exhaustive" : "sampled"},
                   {"seed", cfg.seed ? ordered_json(*cfg.seed) : ordered_json(nullptr)},
                   {"samples", cfg.samples},
                   {"random_graphs", cfg.random_graphs},
                   {"exact_cap", cfg.exact_cap},
                   {"oracle_cap", cfg.oracle_cap},
                   {"verify_decomposition", cfg.verify_decomposition},
                   {"instance_budget_seconds", cfg.instance_budget_seconds ? ordered_json(*cfg.instance_budget_seconds)
                                                                           : ordered_json(nullptr)}};
  ordered_json per_n = ordered_json::object();
  for (std::size_t n = cfg.min_n; n < report.graphs_per_n.size(); ++n)
    per_n[std::to_string(n)] = report.graphs_per_n[n];
  out["graphs_per_n"] = std::move(per_n);
  const auto& c = report.counts;
  out["counts"] = {{"total", c.total},
                   {"applicable", c.applicable},
                   {"unmixed", c.unmixed},
                   {"cohen_macaulay", c.cohen_macaulay},
                   {"gorenstein", c.gorenstein},
                   {"oracle_checked", c.oracle_checked},
                   {"oracle_cohen_macaulay", c.oracle_cohen_macaulay},
                   {"oracle_pure", c.oracle_pure},
                   {"oracle_skipped_capacity", c.oracle_skipped_capacity},
                   {"oracle_timeouts", c.oracle_timeouts},
                   {"decompositions_verified", c.decompositions_verified},
                   {"cm_implies_unmixed_violations", c.cm_implies_unmixed_violations},
                   {"gorenstein_violations", c.gorenstein_violations},
                   {"mismatches", c.mismatches}};
  out["mismatch_count"] = report.mismatches.size();
  ordered_json list = ordered_json::array();
  for (const auto& m : report.mismatches) list.push_back(counterexample_json(m));
  out["mismatches"] = std::move(list);
  return out;
}

ordered_json counterexample_json(const CensusMismatch& mismatch) {
  ordered_json out;
  out["kind"] = mismatch.kind;
  out["detail"] = mismatch.detail;
  const ordered_json instance = to_json(mismatch.instance);
  for (const auto& [key, value] : instance.items()) out[key] = value;
  return out;
}

}  // namespace woideal

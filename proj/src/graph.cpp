#include "woideal/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_map>

#include "woideal/errors.hpp"

namespace woideal {

namespace {

std::string quoted(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

WeightedOrientedGraph WeightedOrientedGraph::build(std::vector<VertexSpec> vertices, std::span<const NamedArc> arcs) {
  std::unordered_map<std::string, VertexId> index;
  std::vector<std::string> names;
  std::vector<std::uint64_t> weights;
  names.reserve(vertices.size());
  weights.reserve(vertices.size());
  for (auto& spec : vertices) {
    if (spec.name.empty()) throw InvalidInput("vertex names must be non-empty");
    if (!index.emplace(spec.name, names.size()).second)
      throw InvalidInput("duplicate vertex name " + quoted(spec.name));
    names.push_back(std::move(spec.name));
    weights.push_back(spec.weight);
  }
  std::vector<Arc> indexed;
  indexed.reserve(arcs.size());
  for (const auto& [from, to] : arcs) {
    auto tail = index.find(from);
    if (tail == index.end()) throw InvalidInput("arc " + from + "->" + to + " references unknown vertex " + quoted(from));
    auto head = index.find(to);
    if (head == index.end()) throw InvalidInput("arc " + from + "->" + to + " references unknown vertex " + quoted(to));
    indexed.push_back({tail->second, head->second});
  }
  return from_indices(std::move(names), std::move(weights), std::move(indexed));
}

WeightedOrientedGraph WeightedOrientedGraph::from_indices(std::vector<std::string> names,
                                                          std::vector<std::uint64_t> weights, std::vector<Arc> arcs) {
  const std::size_t n = names.size();
  if (weights.size() != n) throw InvalidInput("weight list does not match vertex list");
  {
    std::set<std::string_view> seen;
    for (const auto& name : names) {
      if (name.empty()) throw InvalidInput("vertex names must be non-empty");
      if (!seen.insert(name).second) throw InvalidInput("duplicate vertex name " + quoted(name));
    }
  }

  WeightedOrientedGraph g;
  g.out_.resize(n);
  g.in_.resize(n);
  std::set<std::pair<VertexId, VertexId>> seen;
  for (const Arc& a : arcs) {
    if (a.tail >= n || a.head >= n) throw InvalidInput("arc references a vertex index out of range");
    if (a.tail == a.head) throw InvalidInput("loop arc at vertex " + quoted(names[a.tail]));
    if (seen.contains({a.tail, a.head}))
      throw InvalidInput("duplicate arc " + names[a.tail] + "->" + names[a.head]);
    if (seen.contains({a.head, a.tail}))
      throw InvalidInput("antiparallel arcs between " + names[a.head] + " and " + names[a.tail]);
    seen.emplace(a.tail, a.head);
    g.out_[a.tail].push_back(a.head);
    g.in_[a.head].push_back(a.tail);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.out_[v].begin(), g.out_[v].end());
    std::sort(g.in_[v].begin(), g.in_[v].end());
  }

  g.weights_.reserve(n);
  for (std::size_t v = 0; v < n; ++v) {
    const auto w = weights[v];
    if (w < 1) throw InvalidInput("vertex " + quoted(names[v]) + " has weight 0; weights must be >= 1");
    if (w > kMaxWeight)
      throw InvalidInput("vertex " + quoted(names[v]) + " has weight " + std::to_string(w) + " above the limit " +
                         std::to_string(kMaxWeight));
    if (w != 1 && g.in_[v].empty())
      throw InvalidInput("source vertex " + quoted(names[v]) + " (in-degree 0) has weight " + std::to_string(w) +
                         "; sources must have weight 1");
    g.weights_.push_back(static_cast<Weight>(w));
  }
  g.names_ = std::move(names);
  g.arcs_ = std::move(arcs);
  return g;
}

std::optional<VertexId> WeightedOrientedGraph::find(std::string_view name) const {
  for (VertexId v = 0; v < names_.size(); ++v)
    if (names_[v] == name) return v;
  return std::nullopt;
}

SimpleGraph::SimpleGraph(std::vector<std::string> names, std::span<const std::pair<VertexId, VertexId>> edges)
    : names_(std::move(names)), adjacency_(names_.size()) {
  const std::size_t n = names_.size();
  std::set<std::pair<VertexId, VertexId>> unique;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge references a vertex index out of range");
    if (u == v) throw InvalidInput("loop at vertex " + quoted(names_[u]));
    if (!unique.insert(std::minmax(u, v)).second)
      throw InvalidInput("multi-edge between " + names_[u] + " and " + names_[v]);
  }
  edges_.assign(unique.begin(), unique.end());
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

SimpleGraph underlying(const WeightedOrientedGraph& graph) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(graph.arc_count());
  for (const Arc& a : graph.arcs()) edges.emplace_back(a.tail, a.head);
  return SimpleGraph({graph.names().begin(), graph.names().end()}, edges);
}

std::vector<VertexId> maximum_cardinality_search(const SimpleGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::vector<std::size_t> label(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<VertexId> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    VertexId best = n;
    for (VertexId v = 0; v < n; ++v)
      if (!visited[v] && (best == n || label[v] > label[best])) best = v;
    visited[best] = true;
    visit.push_back(best);
    for (VertexId u : graph.neighbors(best))
      if (!visited[u]) ++label[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

bool is_clique(const SimpleGraph& graph, std::span<const VertexId> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!graph.adjacent(vertices[i], vertices[j])) return false;
  return true;
}

bool is_perfect_elimination_ordering(const SimpleGraph& graph, std::span<const VertexId> order) {
  const std::size_t n = graph.vertex_count();
  if (order.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (order[i] >= n || position[order[i]] != n) return false;
    position[order[i]] = i;
  }
  std::vector<VertexId> later;
  for (std::size_t i = 0; i < n; ++i) {
    later.clear();
    for (VertexId u : graph.neighbors(order[i]))
      if (position[u] > i) later.push_back(u);
    if (!is_clique(graph, later)) return false;
  }
  return true;
}

namespace {

// Shortest path from `from` to `to` avoiding `blocked`, by BFS. Empty if none.
std::vector<VertexId> shortest_path(const SimpleGraph& graph, VertexId from, VertexId to,
                                    const std::vector<bool>& blocked) {
  const std::size_t n = graph.vertex_count();
  std::vector<VertexId> parent(n, n);
  std::deque<VertexId> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (VertexId u : graph.neighbors(v)) {
      if (blocked[u] || parent[u] != n) continue;
      parent[u] = v;
      queue.push_back(u);
    }
  }
  if (parent[to] == n) return {};
  std::vector<VertexId> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// With a, c non-adjacent neighbours of b: a shortest a-c path outside N[b] \ {a, c}
// closes a chordless cycle through b.
std::vector<VertexId> cycle_through(const SimpleGraph& graph, VertexId b, VertexId a, VertexId c) {
  std::vector<bool> blocked(graph.vertex_count(), false);
  blocked[b] = true;
  for (VertexId u : graph.neighbors(b)) blocked[u] = true;
  blocked[a] = false;
  blocked[c] = false;
  auto path = shortest_path(graph, a, c, blocked);
  if (path.empty()) return {};
  path.push_back(b);
  return path;
}

std::vector<VertexId> normalize_cycle(std::vector<VertexId> cycle) {
  if (cycle.empty()) return cycle;
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::vector<VertexId> find_induced_cycle(const SimpleGraph& graph) {
  for (VertexId b = 0; b < graph.vertex_count(); ++b) {
    const auto nbrs = graph.neighbors(b);
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (graph.adjacent(nbrs[i], nbrs[j])) continue;
        auto cycle = cycle_through(graph, b, nbrs[i], nbrs[j]);
        if (!cycle.empty()) return normalize_cycle(std::move(cycle));
      }
  }
  return {};
}

ChordalityResult is_chordal(const SimpleGraph& graph) {
  ChordalityResult result;
  auto order = maximum_cardinality_search(graph);
  if (is_perfect_elimination_ordering(graph, order)) {
    result.chordal = true;
    result.elimination_order = std::move(order);
    return result;
  }
  result.induced_cycle = find_induced_cycle(graph);
  if (result.induced_cycle.size() < 4)
    throw InternalError("maximum cardinality search rejected a graph with no chordless cycle");
  return result;
}

bool is_simplicial_vertex(const SimpleGraph& graph, VertexId v) { return is_clique(graph, graph.neighbors(v)); }

SimplicialAnalysis simplicial_analysis(const SimpleGraph& graph) {
  SimplicialAnalysis out;
  const std::size_t n = graph.vertex_count();
  std::set<std::vector<VertexId>> simplices;
  std::vector<bool> dominated(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (!is_simplicial_vertex(graph, v)) continue;
    out.simplicial_vertices.push_back(v);
    std::vector<VertexId> closed(graph.neighbors(v).begin(), graph.neighbors(v).end());
    closed.insert(std::lower_bound(closed.begin(), closed.end(), v), v);
    for (VertexId u : closed) dominated[u] = true;
    simplices.insert(std::move(closed));
  }
  out.simplices.assign(simplices.begin(), simplices.end());
  out.is_simplicial_graph = std::all_of(dominated.begin(), dominated.end(), [](bool b) { return b; });
  return out;
}

SimplexPartitionResult simplex_partition(const SimpleGraph& graph) {
  SimplexPartitionResult result;
  auto analysis = simplicial_analysis(graph);
  std::vector<std::size_t> hits(graph.vertex_count(), 0);
  for (const auto& s : analysis.simplices)
    for (VertexId v : s) ++hits[v];
  for (VertexId v = 0; v < hits.size(); ++v) {
    if (hits[v] != 1) {
      result.witness = v;
      result.witness_simplex_count = hits[v];
      return result;
    }
  }
  result.partition = SimplexPartition{std::move(analysis.simplices)};
  return result;
}

}  // namespace woideal

#include "woideal/covers.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "woideal/errors.hpp"

namespace woideal {

namespace {

bool partition_is_strong(const ArcMasks& masks, const CoverPartition& p) {
  const VertexMask providers = (p.l2 | p.l3) & masks.heavy;
  for (VertexId x : members(p.l3))
    if ((masks.in[x] & providers) == 0) return false;
  return true;
}

CoverPartition partition_unchecked(const ArcMasks& masks, VertexMask cover) {
  CoverPartition p;
  p.cover = cover;
  const VertexMask outside = ~cover & full_mask(masks.n);
  for (VertexId x : members(cover)) {
    if (masks.out[x] & outside)
      p.l1 |= bit(x);
    else if (masks.in[x] & outside)
      p.l2 |= bit(x);
    else
      p.l3 |= bit(x);
  }
  return p;
}

std::vector<VertexMask> neighbor_masks(const SimpleGraph& graph) {
  std::vector<VertexMask> nbrs(graph.vertex_count(), 0);
  for (auto [u, v] : graph.edges()) {
    nbrs[u] |= bit(v);
    nbrs[v] |= bit(u);
  }
  return nbrs;
}

}  // namespace

void check_exact_capacity(std::size_t vertex_count, std::size_t cap) {
  if (vertex_count > cap || vertex_count > kMaskBits)
    throw CapacityError("graph has " + std::to_string(vertex_count) + " vertices; exact-mode cap is " +
                        std::to_string(std::min(cap, kMaskBits)));
}

ArcMasks::ArcMasks(const WeightedOrientedGraph& graph)
    : n(graph.vertex_count()), out(n, 0), in(n, 0), neighbors(n, 0) {
  if (n > kMaskBits) throw CapacityError("bit-mask routines support at most 64 vertices");
  for (const Arc& a : graph.arcs()) {
    out[a.tail] |= bit(a.head);
    in[a.head] |= bit(a.tail);
    neighbors[a.tail] |= bit(a.head);
    neighbors[a.head] |= bit(a.tail);
  }
  for (VertexId v = 0; v < n; ++v)
    if (graph.weight(v) != 1) heavy |= bit(v);
}

bool is_vertex_cover(const SimpleGraph& graph, VertexMask candidate) {
  return std::all_of(graph.edges().begin(), graph.edges().end(),
                     [&](const auto& e) { return has(candidate, e.first) || has(candidate, e.second); });
}

bool is_minimal_vertex_cover(const SimpleGraph& graph, VertexMask candidate) {
  if (!is_vertex_cover(graph, candidate)) return false;
  for (VertexId v : members(candidate))
    if (is_vertex_cover(graph, candidate & ~bit(v))) return false;
  return true;
}

std::vector<VertexCover> minimal_vertex_covers(const SimpleGraph& graph, std::size_t cap) {
  check_exact_capacity(graph.vertex_count(), cap);
  const std::size_t n = graph.vertex_count();
  const VertexMask all = full_mask(n);
  const auto nbrs = neighbor_masks(graph);
  // Non-neighbours in the original graph are neighbours in the complement.
  std::vector<VertexMask> co(n);
  for (VertexId v = 0; v < n; ++v) co[v] = all & ~nbrs[v] & ~bit(v);

  std::vector<VertexCover> covers;
  std::function<void(VertexMask, VertexMask, VertexMask)> expand = [&](VertexMask r, VertexMask p, VertexMask x) {
    if (p == 0 && x == 0) {
      covers.push_back({all & ~r});
      return;
    }
    VertexId pivot = 0;
    std::size_t best = 0;
    bool first = true;
    for (VertexId u : members(p | x)) {
      const auto score = cardinality(p & co[u]);
      if (first || score > best) {
        pivot = u;
        best = score;
        first = false;
      }
    }
    for (VertexId v : members(p & ~co[pivot])) {
      expand(r | bit(v), p & co[v], x & co[v]);
      p &= ~bit(v);
      x |= bit(v);
    }
  };
  expand(0, all, 0);
  std::sort(covers.begin(), covers.end(),
            [](const VertexCover& a, const VertexCover& b) { return size_lex_less(a.members, b.members); });
  return covers;
}

CoverPartition cover_partition(const WeightedOrientedGraph& graph, VertexMask cover) {
  const ArcMasks masks(graph);
  if ((cover & ~full_mask(masks.n)) != 0) throw InvalidInput("cover mentions vertices outside the graph");
  for (const Arc& a : graph.arcs())
    if (!has(cover, a.tail) && !has(cover, a.head))
      throw InvalidInput("not a vertex cover: edge " + graph.name(a.tail) + "-" + graph.name(a.head) +
                         " is uncovered");
  return partition_unchecked(masks, cover);
}

bool is_strong_cover(const WeightedOrientedGraph& graph, VertexMask cover) {
  if (!is_vertex_cover(underlying(graph), cover)) return false;
  const auto p = cover_partition(graph, cover);
  if (p.l3 == 0) return true;  // minimal: every member has a neighbour outside C
  return partition_is_strong(ArcMasks(graph), p);
}

std::vector<CoverPartition> strong_vertex_covers(const WeightedOrientedGraph& graph, std::size_t cap,
                                                 SweepOrder order) {
  check_exact_capacity(graph.vertex_count(), cap);
  const ArcMasks masks(graph);
  const std::size_t n = masks.n;
  const VertexMask all = full_mask(n);
  std::vector<VertexId> sequence(n);
  for (VertexId v = 0; v < n; ++v) sequence[v] = order == SweepOrder::forward ? v : n - 1 - v;

  std::vector<CoverPartition> found;
  // Depth-first over independent sets; each leaf's complement is a cover.
  std::function<void(std::size_t, VertexMask)> sweep = [&](std::size_t depth, VertexMask independent) {
    if (depth == n) {
      const auto p = partition_unchecked(masks, all & ~independent);
      if (partition_is_strong(masks, p)) found.push_back(p);
      return;
    }
    const VertexId v = sequence[depth];
    sweep(depth + 1, independent);
    if ((masks.neighbors[v] & independent) == 0) sweep(depth + 1, independent | bit(v));
  };
  sweep(0, 0);
  std::sort(found.begin(), found.end(),
            [](const CoverPartition& a, const CoverPartition& b) { return size_lex_less(a.cover, b.cover); });
  return found;
}

}  // namespace woideal

#pragma once

// Definition-level reference implementations, exponential in the vertex count.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "woideal/bits.hpp"
#include "woideal/graph.hpp"
#include "woideal/monomial.hpp"

namespace bf {

using woideal::VertexId;
using woideal::VertexMask;
using woideal::WeightedOrientedGraph;

inline bool is_cover(const WeightedOrientedGraph& g, VertexMask c) {
  for (const auto& a : g.arcs())
    if (!woideal::has(c, a.tail) && !woideal::has(c, a.head)) return false;
  return true;
}

inline bool is_minimal_cover(const WeightedOrientedGraph& g, VertexMask c) {
  if (!is_cover(g, c)) return false;
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (woideal::has(c, v) && is_cover(g, c & ~woideal::bit(v))) return false;
  return true;
}

inline std::vector<VertexMask> covers_where(const WeightedOrientedGraph& g, bool (*keep)(const WeightedOrientedGraph&,
                                                                                       VertexMask)) {
  std::vector<VertexMask> out;
  const VertexMask limit = VertexMask{1} << g.vertex_count();
  for (VertexMask c = 0; c < limit; ++c)
    if (keep(g, c)) out.push_back(c);
  std::sort(out.begin(), out.end(), woideal::size_lex_less);
  return out;
}

inline std::vector<VertexMask> minimal_covers(const WeightedOrientedGraph& g) {
  return covers_where(g, is_minimal_cover);
}

struct Parts {
  VertexMask l1 = 0, l2 = 0, l3 = 0;
};

// L1: members with an out-neighbour outside C. L2: other members with an
// in-neighbour outside C. L3: the rest.
inline Parts partition(const WeightedOrientedGraph& g, VertexMask c) {
  Parts p;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!woideal::has(c, v)) continue;
    bool out_leaves = false, in_enters = false;
    for (const auto& a : g.arcs()) {
      if (a.tail == v && !woideal::has(c, a.head)) out_leaves = true;
      if (a.head == v && !woideal::has(c, a.tail)) in_enters = true;
    }
    if (out_leaves)
      p.l1 |= woideal::bit(v);
    else if (in_enters)
      p.l2 |= woideal::bit(v);
    else
      p.l3 |= woideal::bit(v);
  }
  return p;
}

inline bool is_strong(const WeightedOrientedGraph& g, VertexMask c) {
  if (!is_cover(g, c)) return false;
  if (is_minimal_cover(g, c)) return true;
  const Parts p = partition(g, c);
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    if (!woideal::has(p.l3, x)) continue;
    bool fed = false;
    for (const auto& a : g.arcs())
      if (a.head == x && woideal::has(p.l2 | p.l3, a.tail) && g.weight(a.tail) != 1) fed = true;
    if (!fed) return false;
  }
  return true;
}

inline std::vector<VertexMask> strong_covers(const WeightedOrientedGraph& g) { return covers_where(g, is_strong); }

// Some vertex subset of size >= 4 inducing a connected 2-regular subgraph.
inline bool has_long_induced_cycle(const woideal::SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  for (VertexMask s = 0; s < (VertexMask{1} << n); ++s) {
    if (woideal::cardinality(s) < 4) continue;
    bool two_regular = true;
    for (VertexId v : woideal::members(s)) {
      std::size_t d = 0;
      for (VertexId u : g.neighbors(v)) d += woideal::has(s, u);
      if (d != 2) two_regular = false;
    }
    if (!two_regular) continue;
    VertexMask reached = s & (~s + 1);
    for (bool grew = true; grew;) {
      grew = false;
      for (VertexId v : woideal::members(reached))
        for (VertexId u : g.neighbors(v))
          if (woideal::has(s, u) && !woideal::has(reached, u)) {
            reached |= woideal::bit(u);
            grew = true;
          }
    }
    if (reached == s) return true;
  }
  return false;
}

inline bool in_ideal(const std::vector<woideal::Monomial>& gens, const woideal::Monomial& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const woideal::Monomial& g) { return g.divides(m); });
}

// Every monomial with exponents in [0, bound] over `variables` variables.
template <class Fn>
void for_each_monomial(std::size_t variables, woideal::Exponent bound, Fn&& fn) {
  std::vector<woideal::Exponent> e(variables, 0);
  while (true) {
    fn(woideal::Monomial(e));
    std::size_t i = 0;
    for (; i < variables; ++i) {
      if (++e[i] <= bound) break;
      e[i] = 0;
    }
    if (i == variables) return;
  }
}

}  // namespace bf

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace woideal {

using VertexId = std::size_t;

/// Vertex subset as a bit-vector over the input vertex order (bit i <-> vertex i).
using VertexMask = std::uint64_t;

inline constexpr std::size_t kMaskBits = 64;

constexpr VertexMask bit(VertexId v) { return VertexMask{1} << v; }

constexpr bool has(VertexMask m, VertexId v) { return (m >> v) & 1U; }

constexpr std::size_t cardinality(VertexMask m) { return static_cast<std::size_t>(std::popcount(m)); }

constexpr VertexMask full_mask(std::size_t n) {
  return n >= kMaskBits ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline std::vector<VertexId> members(VertexMask m) {
  std::vector<VertexId> out;
  out.reserve(cardinality(m));
  while (m != 0) {
    out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

inline VertexMask mask_of(std::span<const VertexId> vs) {
  VertexMask m = 0;
  for (VertexId v : vs) m |= bit(v);
  return m;
}

/// Order by size, then lexicographically on the sorted member lists.
constexpr bool size_lex_less(VertexMask a, VertexMask b) {
  const auto ca = cardinality(a);
  const auto cb = cardinality(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const VertexMask diff = a ^ b;
  return (a & (diff & (~diff + 1))) != 0;
}

}  // namespace woideal

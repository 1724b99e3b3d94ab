#include "woideal/complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <numeric>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "woideal/errors.hpp"

namespace woideal {

std::string_view to_string(Field field) { return field == Field::F2 ? "F2" : "Q"; }

Deadline Deadline::after(std::chrono::duration<double> budget) {
  return Deadline(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(budget));
}

bool Deadline::expired() const { return at_ && std::chrono::steady_clock::now() >= *at_; }

void Deadline::check() const {
  if (expired()) throw TimeoutError("time budget exhausted");
}

namespace {

std::vector<FaceMask> maximal_faces(std::vector<FaceMask> faces) {
  std::sort(faces.begin(), faces.end(), [](FaceMask a, FaceMask b) { return size_lex_less(b, a); });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<FaceMask> kept;
  for (FaceMask f : faces)
    if (std::none_of(kept.begin(), kept.end(), [f](FaceMask k) { return (f & ~k) == 0; })) kept.push_back(f);
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> universe, std::vector<FaceMask> faces)
    : universe_(std::move(universe)) {
  if (universe_.size() > kMaskBits) throw CapacityError("simplicial complexes support at most 64 vertices");
  if (faces.empty()) throw InvalidInput("the void complex has no facets to store");
  const FaceMask all = full_mask(universe_.size());
  for (FaceMask f : faces)
    if ((f & ~all) != 0) throw InvalidInput("face mentions a vertex outside the universe");
  facets_ = maximal_faces(std::move(faces));
}

int SimplicialComplex::dimension() const {
  std::size_t largest = 0;
  for (FaceMask f : facets_) largest = std::max(largest, cardinality(f));
  return static_cast<int>(largest) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](FaceMask f) { return cardinality(f) == cardinality(facets_.front()); });
}

bool SimplicialComplex::contains(FaceMask face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](FaceMask f) { return (face & ~f) == 0; });
}

VertexMask SimplicialComplex::vertices() const {
  return std::accumulate(facets_.begin(), facets_.end(), VertexMask{0}, std::bit_or<>());
}

SimplicialComplex SimplicialComplex::link(FaceMask face) const {
  std::vector<FaceMask> faces;
  for (FaceMask f : facets_)
    if ((face & ~f) == 0) faces.push_back(f & ~face);
  if (faces.empty()) throw InvalidInput("link of a non-face");
  return SimplicialComplex(universe_, std::move(faces));
}

std::vector<std::vector<FaceMask>> SimplicialComplex::faces_by_dimension() const {
  std::vector<std::vector<FaceMask>> out(static_cast<std::size_t>(dimension() + 2));
  for (FaceMask f : facets_) out[cardinality(f)].push_back(f);
  for (std::size_t size = out.size() - 1; size > 0; --size) {
    auto& bucket = out[size];
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    auto& below = out[size - 1];
    below.reserve(below.size() + bucket.size() * size);
    for (FaceMask f : bucket)
      for (FaceMask rest = f; rest; rest &= rest - 1) below.push_back(f & ~(rest & (~rest + 1)));
  }
  out.front().assign(1, 0);
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& bucket : faces_by_dimension()) f.push_back(bucket.size());
  return f;
}

long long SimplicialComplex::reduced_euler_characteristic() const {
  const auto f = f_vector();
  long long chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 1 ? 1 : -1) * static_cast<long long>(f[i]);
  return chi;
}

BoundaryMatrix boundary_matrix(const std::vector<std::vector<FaceMask>>& faces, int k) {
  BoundaryMatrix m;
  const auto col_index = static_cast<std::size_t>(k + 1);
  if (k < 0 || col_index >= faces.size()) return m;
  const auto& rows = faces[col_index - 1];
  m.rows = rows.size();
  m.columns.reserve(faces[col_index].size());
  for (FaceMask sigma : faces[col_index]) {
    std::vector<std::pair<std::size_t, int>> column;
    int sign = 1;
    for (VertexId v : members(sigma)) {
      const FaceMask facet = sigma & ~bit(v);
      const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      column.emplace_back(static_cast<std::size_t>(it - rows.begin()), sign);
      sign = -sign;
    }
    m.columns.push_back(std::move(column));
  }
  return m;
}

namespace {

constexpr std::uint32_t kLargePrime = 2147483647u;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  for (; e; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

struct SparseColumn {
  std::vector<std::uint32_t> rows;  // ascending
  std::vector<std::uint32_t> values;
};

struct SparseReduction {
  std::size_t rank = 0;
  std::vector<bool> pivot_rows;
};

// Column reduction over F_p keyed on the lowest (largest-index) nonzero entry.
// Columns flagged in `skip` are known to reduce to zero and are not processed.
template <class ColumnFn>
SparseReduction sparse_reduce(std::size_t rows, std::size_t columns, ColumnFn&& column, std::uint32_t p,
                              const std::vector<bool>& skip, const Deadline& deadline) {
  SparseReduction out;
  out.pivot_rows.assign(rows, false);
  std::vector<std::int64_t> pivot_of(rows, -1);
  std::vector<SparseColumn> reduced;
  SparseColumn col, scratch;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> entries;
  for (std::size_t j = 0; j < columns; ++j) {
    if (j < skip.size() && skip[j]) continue;
    if ((j & 255) == 0) deadline.check();
    entries.clear();
    column(j, [&](std::size_t r, int s) {
      const auto v = s > 0 ? static_cast<std::uint32_t>(s) % p : (p - static_cast<std::uint32_t>(-s) % p) % p;
      if (v) entries.emplace_back(static_cast<std::uint32_t>(r), v);
    });
    std::sort(entries.begin(), entries.end());
    col.rows.clear();
    col.values.clear();
    for (auto [r, v] : entries) {
      col.rows.push_back(r);
      col.values.push_back(v);
    }
    while (!col.rows.empty()) {
      const std::uint32_t low = col.rows.back();
      const std::int64_t pj = pivot_of[low];
      if (pj < 0) {
        pivot_of[low] = static_cast<std::int64_t>(reduced.size());
        out.pivot_rows[low] = true;
        ++out.rank;
        reduced.push_back(col);
        break;
      }
      const SparseColumn& piv = reduced[static_cast<std::size_t>(pj)];
      const std::uint64_t factor =
          static_cast<std::uint64_t>(col.values.back()) * mod_pow(piv.values.back(), p - 2, p) % p;
      scratch.rows.clear();
      scratch.values.clear();
      std::size_t a = 0, b = 0;
      while (a < col.rows.size() || b < piv.rows.size()) {
        if (b == piv.rows.size() || (a < col.rows.size() && col.rows[a] < piv.rows[b])) {
          scratch.rows.push_back(col.rows[a]);
          scratch.values.push_back(col.values[a++]);
        } else {
          const std::uint64_t sub = factor * piv.values[b] % p;
          std::uint64_t v = p - sub;
          if (a < col.rows.size() && col.rows[a] == piv.rows[b]) v = (v + col.values[a++]) % p;
          if (v) {
            scratch.rows.push_back(piv.rows[b]);
            scratch.values.push_back(static_cast<std::uint32_t>(v));
          }
          ++b;
        }
      }
      std::swap(col, scratch);
    }
  }
  return out;
}

SparseReduction sparse_reduce(const BoundaryMatrix& m, std::uint32_t p, const std::vector<bool>& skip,
                              const Deadline& deadline) {
  return sparse_reduce(
      m.rows, m.columns.size(),
      [&](std::size_t j, auto&& emit) {
        for (auto [r, s] : m.columns[j]) emit(r, s);
      },
      p, skip, deadline);
}

// ∂_k straight from the face lists, without materializing the matrix.
SparseReduction sparse_reduce(const std::vector<std::vector<FaceMask>>& faces, int k, std::uint32_t p,
                              const std::vector<bool>& skip, const Deadline& deadline) {
  const auto c = static_cast<std::size_t>(k + 1);
  const auto& rows = faces[c - 1];
  const auto& cols = faces[c];
  return sparse_reduce(
      rows.size(), cols.size(),
      [&](std::size_t j, auto&& emit) {
        int sign = 1;
        for (FaceMask rest = cols[j]; rest; rest &= rest - 1) {
          const FaceMask facet = cols[j] & ~(rest & (~rest + 1));
          emit(static_cast<std::size_t>(std::lower_bound(rows.begin(), rows.end(), facet) - rows.begin()), sign);
          sign = -sign;
        }
      },
      p, skip, deadline);
}

std::size_t rank_f2(const BoundaryMatrix& m, const Deadline& deadline) { return sparse_reduce(m, 2, {}, deadline).rank; }

struct Overflow {};

std::int64_t checked_det2(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::int64_t ab, cd, diff;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) || __builtin_sub_overflow(ab, cd, &diff))
    throw Overflow{};
  return diff;
}

template <class Int>
Int det2(const Int& a, const Int& b, const Int& c, const Int& d) {
  if constexpr (std::is_same_v<Int, std::int64_t>)
    return checked_det2(a, b, c, d);
  else
    return a * b - c * d;
}

// Fraction-free Gaussian elimination; every division is exact.
template <class Int>
std::size_t bareiss_rank(std::vector<std::vector<Int>> a, const Deadline& deadline) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a.front().size() : 0;
  std::size_t rank = 0;
  Int previous = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    deadline.check();
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Int pivot = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      const Int lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = det2<Int>(pivot, a[i][j], lead, a[rank][j]) / previous;
      a[i][c] = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

std::size_t rank_q(const BoundaryMatrix& m, const Deadline& deadline) {
  if (m.rows == 0 || m.columns.empty()) return 0;
  // Transposed: one row per column of ∂; rank is unchanged.
  std::vector<std::vector<std::int64_t>> dense(m.columns.size(), std::vector<std::int64_t>(m.rows, 0));
  for (std::size_t j = 0; j < m.columns.size(); ++j)
    for (auto [r, s] : m.columns[j]) dense[j][r] = s;
  try {
    return bareiss_rank(dense, deadline);
  } catch (const Overflow&) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> big(dense.size());
    for (std::size_t i = 0; i < dense.size(); ++i) big[i].assign(dense[i].begin(), dense[i].end());
    return bareiss_rank(std::move(big), deadline);
  }
}

void check_oracle_capacity(const SimplicialComplex& complex, std::size_t cap) {
  if (complex.universe().size() > cap)
    throw CapacityError("complex has " + std::to_string(complex.universe().size()) +
                        " vertices; oracle cap is " + std::to_string(cap));
}

// Betti numbers over F_p never undercount those over Q (rank over Q >= rank mod p),
// so every profile starts over F2.
HomologyProfile homology_unchecked(const SimplicialComplex& complex, Field field, const Deadline& deadline) {
  const auto faces = complex.faces_by_dimension();
  const int dim = complex.dimension();
  // ranks[k + 1] = rank ∂_k, for k = -1 .. dim + 1 (∂_{-1} and ∂_{dim+1} are zero)
  std::vector<std::size_t> ranks(static_cast<std::size_t>(dim + 3), 0);
  std::vector<bool> cleared;
  for (int k = dim; k >= 0; --k) {
    auto reduction = sparse_reduce(faces, k, 2, cleared, deadline);
    ranks[static_cast<std::size_t>(k + 1)] = reduction.rank;
    cleared = std::move(reduction.pivot_rows);
  }
  const auto betti_from = [&](const std::vector<std::size_t>& r) {
    std::vector<std::size_t> betti;
    for (int k = -1; k <= dim; ++k) {
      const auto i = static_cast<std::size_t>(k + 1);
      betti.push_back(faces[i].size() - r[i] - r[i + 1]);
    }
    return betti;
  };
  HomologyProfile profile{field, betti_from(ranks)};
  if (field == Field::Q) {
    // Refine only the nonzero entries: first modulo a large prime, then exactly.
    std::vector<int> level(ranks.size(), 0);
    level.front() = level.back() = 2;
    for (int pass = 1; pass <= 2; ++pass) {
      for (int k = -1; k < dim; ++k) {
        const auto i = static_cast<std::size_t>(k + 1);
        if (profile.reduced_betti[i] == 0) continue;
        for (std::size_t j : {i, i + 1}) {
          if (level[j] >= pass) continue;
          const int k = static_cast<int>(j) - 1;
          ranks[j] = pass == 1 ? sparse_reduce(faces, k, kLargePrime, {}, deadline).rank
                               : rank_q(boundary_matrix(faces, k), deadline);
          level[j] = pass;
        }
      }
      profile.reduced_betti = betti_from(ranks);
    }
    // The reduced Euler characteristic is field independent and fixes the top entry.
    long long top = complex.reduced_euler_characteristic();
    for (int k = -1; k < dim; ++k)
      top -= (k % 2 == 0 ? 1 : -1) * static_cast<long long>(profile.reduced_betti[static_cast<std::size_t>(k + 1)]);
    profile.reduced_betti.back() = static_cast<std::size_t>(dim % 2 == 0 ? top : -top);
  }
  return profile;
}

bool is_connected(const std::vector<FaceMask>& facets, VertexMask vertices) {
  VertexMask reached = vertices & (~vertices + 1);
  for (bool grew = true; grew;) {
    grew = false;
    for (FaceMask f : facets)
      if ((f & reached) && (f & ~reached)) {
        reached |= f;
        grew = true;
      }
  }
  return reached == vertices;
}

class ReisnerChecker {
 public:
  ReisnerChecker(const std::vector<std::string>& universe, Field field, const Deadline& deadline)
      : universe_(universe), field_(field), deadline_(deadline) {}

  bool check(const std::vector<FaceMask>& facets) {
    if (auto it = memo_.find(facets); it != memo_.end()) return it->second;
    deadline_.check();
    const bool verdict = evaluate(facets);
    memo_.emplace(facets, verdict);
    return verdict;
  }

 private:
  bool evaluate(const std::vector<FaceMask>& facets) {
    const std::size_t top = cardinality(facets.front());
    if (!std::all_of(facets.begin(), facets.end(), [&](FaceMask f) { return cardinality(f) == top; }))
      return false;  // CM complexes are pure
    const int dim = static_cast<int>(top) - 1;
    if (dim <= 0) return true;
    const VertexMask vertices = std::accumulate(facets.begin(), facets.end(), VertexMask{0}, std::bit_or<>());
    const VertexMask apex = std::accumulate(facets.begin(), facets.end(), vertices, std::bit_and<>());
    if (apex != 0) {  // a cone is CM exactly when its base is
      if (apex == vertices) return true;
      std::vector<FaceMask> base;
      base.reserve(facets.size());
      for (FaceMask f : facets) base.push_back(f & ~apex);
      std::sort(base.begin(), base.end());
      return check(base);
    }
    if (dim == 1) {
      if (!is_connected(facets, vertices)) return false;
    } else {
      const auto profile = homology_unchecked(SimplicialComplex(universe_, facets), field_, deadline_);
      for (int i = -1; i < dim; ++i)
        if (profile.betti(i) != 0) return false;
    }
    for (VertexId v : members(vertices)) {
      std::vector<FaceMask> link;
      for (FaceMask f : facets)
        if (has(f, v)) link.push_back(f & ~bit(v));
      std::sort(link.begin(), link.end());
      if (!check(link)) return false;
    }
    return true;
  }

  const std::vector<std::string>& universe_;
  Field field_;
  const Deadline& deadline_;
  std::unordered_map<std::vector<FaceMask>, bool, boost::hash<std::vector<FaceMask>>> memo_;
};

}  // namespace

std::size_t rank_over(Field field, const BoundaryMatrix& matrix, const Deadline& deadline) {
  return field == Field::F2 ? rank_f2(matrix, deadline) : rank_q(matrix, deadline);
}

std::size_t HomologyProfile::betti(int dim) const {
  const auto i = static_cast<std::size_t>(dim + 1);
  return dim >= -1 && i < reduced_betti.size() ? reduced_betti[i] : 0;
}

long long HomologyProfile::euler_characteristic() const {
  long long chi = 0;
  for (std::size_t i = 0; i < reduced_betti.size(); ++i)
    chi += (i % 2 == 1 ? 1 : -1) * static_cast<long long>(reduced_betti[i]);
  return chi;
}

HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex, Field field, std::size_t cap,
                                       const Deadline& deadline) {
  check_oracle_capacity(complex, cap);
  return homology_unchecked(complex, field, deadline);
}

bool is_cm_reisner(const SimplicialComplex& complex, Field field, std::size_t cap, const Deadline& deadline) {
  check_oracle_capacity(complex, cap);
  ReisnerChecker checker(complex.universe(), field, deadline);
  return checker.check(complex.facets());
}

}  // namespace woideal

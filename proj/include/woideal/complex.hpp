#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "woideal/bits.hpp"

namespace woideal {

using FaceMask = VertexMask;

/// Default cap on the (polarized) universe size for homological computations.
inline constexpr std::size_t kDefaultOracleCap = 16;

enum class Field { F2, Q };

std::string_view to_string(Field field);

/// Optional wall-clock limit; `check()` throws TimeoutError once it has passed.
class Deadline {
 public:
  Deadline() = default;
  explicit Deadline(std::chrono::steady_clock::time_point at) : at_(at) {}
  static Deadline after(std::chrono::duration<double> budget);
  void check() const;
  bool expired() const;

 private:
  std::optional<std::chrono::steady_clock::time_point> at_;
};

/// Finite simplicial complex stored by its facets (inclusion-maximal faces).
/// The void complex is not representable; {∅} has the single facet 0.
class SimplicialComplex {
 public:
  SimplicialComplex(std::vector<std::string> universe, std::vector<FaceMask> faces);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<FaceMask>& facets() const { return facets_; }
  /// Largest face size minus one; -1 for {∅}.
  int dimension() const;
  bool is_pure() const;
  bool contains(FaceMask face) const;
  VertexMask vertices() const;
  /// lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ }. σ must be a face.
  SimplicialComplex link(FaceMask face) const;

  /// faces_by_dimension()[k + 1] lists the k-faces in increasing mask order.
  std::vector<std::vector<FaceMask>> faces_by_dimension() const;
  /// f_{-1}, f_0, ..., f_dim.
  std::vector<std::size_t> f_vector() const;
  /// Σ_{i >= -1} (-1)^i f_i.
  long long reduced_euler_characteristic() const;

 private:
  std::vector<std::string> universe_;
  std::vector<FaceMask> facets_;
};

/// Sparse integer matrix of the simplicial boundary map ∂_k : C_k -> C_{k-1},
/// stored by columns (one per k-face) of (row, ±1) entries.
struct BoundaryMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

/// ∂_k for k >= 0 using faces_by_dimension() of the complex; ∂_0 maps vertices to ∅.
BoundaryMatrix boundary_matrix(const std::vector<std::vector<FaceMask>>& faces, int k);

std::size_t rank_over(Field field, const BoundaryMatrix& matrix, const Deadline& deadline = {});

struct HomologyProfile {
  Field field = Field::F2;
  /// reduced_betti[i] is the rank of H̃_{i-1}.
  std::vector<std::size_t> reduced_betti;

  std::size_t betti(int dim) const;
  long long euler_characteristic() const;
};

/// Throws CapacityError when the universe exceeds `cap`.
HomologyProfile reduced_homology_ranks(const SimplicialComplex& complex, Field field,
                                       std::size_t cap = kDefaultOracleCap, const Deadline& deadline = {});

/// Reisner's criterion: every link (including lk ∅ = Δ) has vanishing reduced
/// homology below its dimension. Throws CapacityError when the universe exceeds `cap`.
bool is_cm_reisner(const SimplicialComplex& complex, Field field, std::size_t cap = kDefaultOracleCap,
                   const Deadline& deadline = {});

}  // namespace woideal

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace woideal {

using Exponent = std::uint32_t;

/// Dense exponent vector over an ideal's variable universe.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {}

  /// x_v^e in a ring with `variables` variables.
  static Monomial power(std::size_t variables, std::size_t v, Exponent e);

  std::size_t variables() const { return exponents_.size(); }
  Exponent operator[](std::size_t v) const { return exponents_[v]; }
  std::span<const Exponent> exponents() const { return exponents_; }
  std::uint64_t degree() const;
  bool is_square_free() const;
  /// True for the constant monomial 1.
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Product with overflow checking.
  Monomial operator*(const Monomial& other) const;
  /// Radical: every positive exponent becomes 1.
  Monomial support() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exponents_;
};

/// Canonical display order: total degree ascending, then lexicographic with
/// larger exponents on earlier variables first.
bool canonical_less(const Monomial& a, const Monomial& b);

/// Unique minimal generating set of the ideal generated by `gens`, in canonical order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

using Universe = std::vector<std::string>;

/// Monomial ideal kept in minimal-generator form over a named variable universe.
/// Two ideals are equal iff their universes and minimal generating sets are.
class MonomialIdeal {
 public:
  MonomialIdeal() : universe_(std::make_shared<const Universe>()) {}
  MonomialIdeal(Universe universe, std::vector<Monomial> generators);
  MonomialIdeal(std::shared_ptr<const Universe> universe, std::vector<Monomial> generators);

  const Universe& universe() const { return *universe_; }
  const std::shared_ptr<const Universe>& shared_universe() const { return universe_; }
  std::span<const Monomial> generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  bool is_zero() const { return generators_.empty(); }
  bool is_square_free() const;
  bool contains(const Monomial& m) const;
  /// Ideal containment: every generator of `other` lies in this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.universe() == b.universe() && a.generators_ == b.generators_;
  }

 private:
  std::shared_ptr<const Universe> universe_;
  std::vector<Monomial> generators_;
};

MonomialIdeal radical(const MonomialIdeal& ideal);

/// Exact intersection via pairwise lcms of generators. Universes must match.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Throws InvalidInput on an empty list.
MonomialIdeal intersect(std::span<const MonomialIdeal> ideals);

/// e.g. "x1*x2^2"; "1" for the unit monomial.
std::string to_string(const Monomial& m, const Universe& universe);
std::string to_string(const MonomialIdeal& ideal);

}  // namespace woideal

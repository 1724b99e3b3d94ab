#include "woideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "woideal/errors.hpp"

namespace woideal {

Monomial Monomial::power(std::size_t variables, std::size_t v, Exponent e) {
  std::vector<Exponent> exps(variables, 0);
  exps.at(v) = e;
  return Monomial(std::move(exps));
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (Exponent e : exponents_) d += e;
  return d;
}

bool Monomial::is_square_free() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  std::vector<Exponent> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(exponents_[i], other.exponents_[i]);
  return Monomial(std::move(out));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (exponents_[i] > std::numeric_limits<Exponent>::max() - other.exponents_[i])
      throw CapacityError("exponent overflow in monomial product");
    out[i] = exponents_[i] + other.exponents_[i];
  }
  return Monomial(std::move(out));
}

Monomial Monomial::support() const {
  std::vector<Exponent> out(exponents_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exponents_[i] > 0 ? 1 : 0;
  return Monomial(std::move(out));
}

bool canonical_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), canonical_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (auto& g : gens) {
    // Kept generators never have larger degree, so only they can divide g.
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  return kept;
}

MonomialIdeal::MonomialIdeal(Universe universe, std::vector<Monomial> generators)
    : MonomialIdeal(std::make_shared<const Universe>(std::move(universe)), std::move(generators)) {}

MonomialIdeal::MonomialIdeal(std::shared_ptr<const Universe> universe, std::vector<Monomial> generators)
    : universe_(std::move(universe)) {
  for (const auto& g : generators)
    if (g.variables() != universe_->size())
      throw InvalidInput("generator arity does not match the ideal's universe");
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_square_free() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& g) { return g.is_square_free(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.generator_count());
  for (const auto& g : ideal.generators()) gens.push_back(g.support());
  return MonomialIdeal(ideal.shared_universe(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.universe() != b.universe()) throw InvalidInput("cannot intersect ideals over different universes");
  std::vector<Monomial> lcms;
  lcms.reserve(a.generator_count() * b.generator_count());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) lcms.push_back(f.lcm(g));
  return MonomialIdeal(a.shared_universe(), std::move(lcms));
}

MonomialIdeal intersect(std::span<const MonomialIdeal> ideals) {
  if (ideals.empty()) throw InvalidInput("intersection of an empty list of ideals");
  MonomialIdeal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

std::string to_string(const Monomial& m, const Universe& universe) {
  std::string out;
  for (std::size_t v = 0; v < m.variables(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += universe.at(v);
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "<0>";
  std::string out = "<";
  for (std::size_t i = 0; i < ideal.generator_count(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i], ideal.universe());
  }
  return out + ">";
}

}  // namespace woideal

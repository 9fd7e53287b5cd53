#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ultrameasure/group.hpp"
#include "ultrameasure/rational.hpp"
#include "ultrameasure/ultranorm.hpp"

namespace ultrameasure {

/// F-valued function on a subgroup of a finite group (often the whole group
/// or one level of a chain). Values are stored densely by ambient element
/// index; entries outside the domain are zero and never read.
class ScalarFunction {
 public:
  explicit ScalarFunction(Subgroup domain);
  ScalarFunction(Subgroup domain, const std::map<std::uint32_t, Rational>& values);

  static ScalarFunction zero(Subgroup domain) { return ScalarFunction(std::move(domain)); }
  static ScalarFunction constant(Subgroup domain, const Rational& c);
  /// Indicator of `set` ∩ domain.
  static ScalarFunction indicator(Subgroup domain, std::span<const Element> set);

  const Subgroup& domain() const { return domain_; }
  const FiniteGroup& group() const { return domain_.group(); }

  /// Throws InputError outside the domain.
  const Rational& operator()(Element x) const;
  /// Value at x, or zero when x is outside the domain.
  const Rational& value_or_zero(Element x) const;
  void set(Element x, Rational v);

  bool is_zero() const;

  /// x ↦ f(h⁻¹x); h must lie in the domain.
  ScalarFunction left_translate(Element h) const;
  /// x ↦ f(x⁻¹).
  ScalarFunction inverted() const;
  /// Restriction to a subgroup of the domain.
  ScalarFunction restrict_to(const Subgroup& sub) const;

  ScalarFunction& operator+=(const ScalarFunction& rhs);
  ScalarFunction& operator-=(const ScalarFunction& rhs);
  ScalarFunction& operator*=(const Rational& c);
  friend ScalarFunction operator+(ScalarFunction a, const ScalarFunction& b) { return a += b; }
  friend ScalarFunction operator-(ScalarFunction a, const ScalarFunction& b) { return a -= b; }
  friend ScalarFunction operator*(const Rational& c, ScalarFunction f) { return f *= c; }

  friend bool operator==(const ScalarFunction& a, const ScalarFunction& b);

 private:
  Subgroup domain_;
  std::vector<Rational> values_;
};

/// Atomic F-valued measure on a subgroup of a finite group.
///
/// The probability flag is a declaration checked at construction: total mass
/// exactly 1. The companion bound |atom|_q <= 1 depends on the field's q and is
/// checked by is_probability(q).
class Measure {
 public:
  Measure(Subgroup domain, const std::map<std::uint32_t, Rational>& atoms, bool probability = false);
  Measure(Subgroup domain, std::vector<Rational> dense_atoms, bool probability = false);

  /// Uniform atoms 1/|domain|; a probability measure.
  static Measure haar(Subgroup domain);
  static Measure point_mass(Subgroup domain, Element at);

  const Subgroup& domain() const { return domain_; }
  const FiniteGroup& group() const { return domain_.group(); }

  const Rational& atom(Element x) const;
  const Rational& atom_or_zero(Element x) const;
  /// μ(A) for A a set of elements (elements outside the domain carry no mass).
  Rational mass(std::span<const Element> set) const;
  Rational total_mass() const;

  bool declared_probability() const { return probability_; }
  /// Total mass 1 and every atom in the closed unit ball of |.|_q.
  bool is_probability(std::uint64_t q) const;

  /// No zero atom on the domain: quasi-invariance under the domain's own translations.
  bool has_full_support() const;
  /// Zero atoms form a union of left H-cosets hx (the finite-level form of μ_φ ~ μ for φ ∈ H).
  bool is_quasi_invariant(const Subgroup& h) const;

  /// Throws PreconditionError naming the first zero atom.
  void require_full_support(const char* context) const;

  friend bool operator==(const Measure& a, const Measure& b) {
    return a.domain_ == b.domain_ && a.atoms_ == b.atoms_ && a.probability_ == b.probability_;
  }

 private:
  void validate();

  Subgroup domain_;
  std::vector<Rational> atoms_;
  bool probability_ = false;
};

enum class Side { left, right };

/// ‖A‖_μ: the largest |μ(B)| over B ⊆ A. Atoms are the minimal clopen sets,
/// so this is the largest atom norm on A; zero for the empty set.
UltraNorm set_norm(const Measure& mu, std::span<const Element> set, std::uint64_t q);
/// ‖domain‖_μ, the norm of the measure.
UltraNorm measure_norm(const Measure& mu, std::uint64_t q);

/// N_μ(x) = |μ({x})|.
UltraNorm pointwise_norm(const Measure& mu, Element x, std::uint64_t q);

/// Left: μ_φ(A) = μ(φ⁻¹A). Right: μ^φ(A) = μ(Aφ⁻¹).
Measure translate(const Measure& mu, Element phi, Side side);

/// ρ_μ(φ, g) = μ(φ⁻¹g) / μ(g). Throws PreconditionError on a zero atom.
ScalarFunction radon_nikodym(const Measure& mu, Element phi);

/// c·a + d·b on a common domain; never flagged as a probability measure.
Measure combine(const Rational& c, const Measure& a, const Rational& d, const Measure& b);

/// Σ_g f(g) μ(g). Domains must coincide.
Rational integrate(const ScalarFunction& f, const Measure& mu);

}  // namespace ultrameasure

#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ultrameasure/convolve.hpp"
#include "ultrameasure/group.hpp"
#include "ultrameasure/measure.hpp"

namespace ultrameasure {

/// A subgroup chain G_0 ⊇ ... ⊇ G_m with a probability measure μ^i on each level.
class MeasuredChain {
 public:
  /// Throws ValidationError unless measure i lives on level i and is declared
  /// a probability measure.
  MeasuredChain(SubgroupChain chain, std::vector<Measure> measures);

  /// Haar measure on every level.
  static MeasuredChain haar(SubgroupChain chain);

  const SubgroupChain& chain() const { return chain_; }
  std::size_t length() const { return chain_.length(); }
  const Subgroup& level(std::size_t i) const { return chain_.level(i); }
  const Measure& measure(std::size_t i) const { return measures_.at(i); }
  const std::vector<Measure>& measures() const { return measures_; }

  friend bool operator==(const MeasuredChain& a, const MeasuredChain& b) {
    return a.chain_ == b.chain_ && a.measures_ == b.measures_;
  }

 private:
  SubgroupChain chain_;
  std::vector<Measure> measures_;
};

using MeasuredChainPtr = std::shared_ptr<const MeasuredChain>;

/// Element f = (f^0, ..., f^m) of the tower algebra over a measured chain,
/// f^i a function on G_i. Beyond the chain's top level every component is zero.
class TowerElement {
 public:
  /// Throws InputError unless component i lives on level i.
  TowerElement(MeasuredChainPtr chain, std::vector<ScalarFunction> components);

  static TowerElement zero(MeasuredChainPtr chain);
  /// Ch_{G_i} on every level.
  static TowerElement level_indicators(MeasuredChainPtr chain);

  const MeasuredChain& chain() const { return *chain_; }
  const MeasuredChainPtr& chain_ptr() const { return chain_; }
  std::size_t length() const { return components_.size(); }
  const ScalarFunction& component(std::size_t i) const { return components_.at(i); }
  const std::vector<ScalarFunction>& components() const { return components_; }

  bool is_zero() const;

  TowerElement& operator+=(const TowerElement& rhs);
  TowerElement& operator-=(const TowerElement& rhs);
  TowerElement& operator*=(const Rational& c);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(const Rational& c, TowerElement f) { return f *= c; }

  friend bool operator==(const TowerElement& a, const TowerElement& b);

 private:
  MeasuredChainPtr chain_;
  std::vector<ScalarFunction> components_;
};

/// (f⋆g)^i = f^{i+1} ∗ g^i. The top component of the product is zero, since
/// f^{m+1} = 0 on a chain of m+1 levels.
TowerElement star(const TowerElement& f, const TowerElement& g);

/// (f*)^j(y) = f^j(y⁻¹).
TowerElement involution(const TowerElement& f);

/// Level norms ‖f^i‖_i for every i; the top level uses G_{m+1} = {e}.
std::vector<LevelNorms> tower_level_norms(const TowerElement& f, std::uint64_t q);

/// ‖f‖ = max_i ‖f^i‖_i.
UltraNorm algebra_norm(const TowerElement& f, std::uint64_t q);

/// Componentwise (f⋆g)⋆h − f⋆(g⋆h); nonzero means a non-associativity witness.
TowerElement associativity_defect(const TowerElement& f, const TowerElement& g,
                                  const TowerElement& h);
/// Componentwise f⋆g − g⋆f.
TowerElement commutativity_defect(const TowerElement& f, const TowerElement& g);

/// Idempotent e with e^j = α_j Ch_{U_j}, α_j = 1/μ^j(U_j). `inner[j]` must be a
/// subgroup of level j with inner[j+1] ⊆ inner[j]. Satisfies (e⋆e)^j = e^j
/// below the top level. Throws PreconditionError on a zero-mass U_j.
TowerElement idempotent_tower(MeasuredChainPtr chain, const std::vector<Subgroup>& inner);

/// Both sides of ((f^{j+1})* ∗ f^j)(e) = ∫_{G_{j+1}} (f^{j+1})² dμ^{j+1}.
/// Requires f^j restricted to G_{j+1} to equal f^{j+1} (PreconditionError otherwise).
/// The two sides agree whenever μ^{j+1} is invariant under inversion.
std::pair<Rational, Rational> note19_identity(const TowerElement& f, std::size_t j);

// Scalar model -----------------------------------------------------------------

/// Finitely supported sequence α = (α^0, α^1, ...) of rationals: the tower
/// algebra over a chain of trivial groups. Trailing zeros are dropped.
class ScalarSequence {
 public:
  ScalarSequence() = default;
  explicit ScalarSequence(std::vector<Rational> entries);

  /// α^i, zero past the stored entries.
  const Rational& operator[](std::size_t i) const;
  /// Number of stored entries (index of the last nonzero entry + 1).
  std::size_t size() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend bool operator==(const ScalarSequence&, const ScalarSequence&) = default;

 private:
  std::vector<Rational> entries_;
};

/// γ^i = α^{i+1} β^i.
ScalarSequence c0_star(const ScalarSequence& alpha, const ScalarSequence& beta);

enum class IdealKind {
  J,  // α^j = 0 for every j > i
  K,  // α^j = 0 for j = 0..i
};

/// Literal membership. K with i = -1 is the whole algebra.
bool ideal_member(const ScalarSequence& x, IdealKind kind, std::int64_t i);

}  // namespace ultrameasure

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ultrameasure/measure.hpp"

namespace ultrameasure {

/// Linear operator on functions over a finite group, as an exact square matrix
/// indexed by element indices: (T f)(x) = Σ_y T[x][y] f(y).
class Operator {
 public:
  explicit Operator(std::size_t dim);
  Operator(std::size_t dim, std::vector<Rational> row_major);

  static Operator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Rational& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
  void set(std::size_t row, std::size_t col, Rational v) { entries_[row * dim_ + col] = std::move(v); }
  const std::vector<Rational>& entries() const { return entries_; }

  /// f must live on the whole group of matching order.
  ScalarFunction apply(const ScalarFunction& f) const;

  Operator& operator+=(const Operator& rhs);
  Operator& operator*=(const Rational& c);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator*(const Rational& c, Operator a) { return a *= c; }
  /// Composition: (A * B) f = A (B f).
  friend Operator operator*(const Operator& a, const Operator& b);

  friend bool operator==(const Operator&, const Operator&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// (T_h f)(g) = ρ_μ(h, g) f(h⁻¹g). μ must live on the whole group with no zero atom.
Operator weighted_regular_rep(const Measure& mu, Element h);

/// T_g for every g, indexed by element index.
std::vector<Operator> weighted_family(const Measure& mu);

/// λI + Σ_g a(h⁻¹g) ρ_μ(h, g) T(g) μ(g). `family[g.index]` is T(g).
Operator averaged_operator(const ScalarFunction& a, std::span<const Operator> family,
                           const Measure& mu, Element h, const Rational& lambda);

struct IsometryResult {
  bool isometric = true;
  std::optional<ScalarFunction> counterexample;
};

/// Checks ‖T f‖_L = ‖f‖_L (μ-weighted sup norm) on every point indicator,
/// the identity's first, then on `samples` seeded random functions.
IsometryResult isometry_check(const Operator& t, const Measure& mu, std::uint64_t q,
                              std::uint64_t seed = 0, std::size_t samples = 16);

}  // namespace ultrameasure

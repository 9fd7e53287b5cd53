#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "ultrameasure/rational.hpp"

namespace ultrameasure {

/// Non-negative value of an ultrametric norm: either exactly zero or q^e with
/// a rational exponent e. Closed under max, product and square root.
///
/// Nonzero values carry their base q; comparing or multiplying values with
/// different bases is a logic error.
class UltraNorm {
 public:
  /// Default-constructed norm is zero.
  UltraNorm() = default;

  static UltraNorm zero() { return UltraNorm(); }
  static UltraNorm one(std::uint64_t q) { return power(q, Rational(0)); }
  static UltraNorm power(std::uint64_t q, Rational exponent);

  /// Inverse of str(): "0" or "q^{e}" with e written as num/den.
  static UltraNorm parse(std::string_view text);

  bool is_zero() const { return base_ == 0; }
  std::uint64_t base() const { return base_; }
  /// Meaningless for zero.
  const Rational& exponent() const { return exponent_; }

  std::string str() const;

  friend UltraNorm operator*(const UltraNorm& a, const UltraNorm& b);
  friend bool operator==(const UltraNorm& a, const UltraNorm& b);
  friend std::strong_ordering operator<=>(const UltraNorm& a, const UltraNorm& b);

  friend std::ostream& operator<<(std::ostream& os, const UltraNorm& n) { return os << n.str(); }

 private:
  std::uint64_t base_ = 0;
  Rational exponent_;
};

/// |x|_q = q^{-valuation(x)}; zero iff x == 0.
UltraNorm abs_q(const Rational& x, std::uint64_t q);

/// Halves the exponent; zero stays zero.
UltraNorm norm_sqrt(const UltraNorm& n);

}  // namespace ultrameasure

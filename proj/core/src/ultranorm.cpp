#include "ultrameasure/ultranorm.hpp"

#include "ultrameasure/errors.hpp"

namespace ultrameasure {

namespace {

void require_same_base(const UltraNorm& a, const UltraNorm& b) {
  if (!a.is_zero() && !b.is_zero() && a.base() != b.base()) {
    throw std::logic_error("mixing norms of bases " + std::to_string(a.base()) + " and " +
                           std::to_string(b.base()));
  }
}

}  // namespace

UltraNorm UltraNorm::power(std::uint64_t q, Rational exponent) {
  if (!is_prime(q)) throw InputError("norm base " + std::to_string(q) + " is not prime");
  UltraNorm n;
  n.base_ = q;
  n.exponent_ = std::move(exponent);
  return n;
}

UltraNorm UltraNorm::parse(std::string_view text) {
  if (text == "0") return zero();
  auto caret = text.find("^{");
  if (caret == std::string_view::npos || text.back() != '}') {
    throw InputError("malformed norm '" + std::string(text) + "'");
  }
  std::uint64_t q = 0;
  for (char c : text.substr(0, caret)) {
    if (c < '0' || c > '9') throw InputError("malformed norm '" + std::string(text) + "'");
    q = q * 10 + static_cast<std::uint64_t>(c - '0');
  }
  auto exponent = text.substr(caret + 2, text.size() - caret - 3);
  return power(q, Rational::parse(exponent));
}

std::string UltraNorm::str() const {
  if (is_zero()) return "0";
  return std::to_string(base_) + "^{" + exponent_.str() + "}";
}

UltraNorm operator*(const UltraNorm& a, const UltraNorm& b) {
  if (a.is_zero() || b.is_zero()) return UltraNorm::zero();
  require_same_base(a, b);
  return UltraNorm::power(a.base_, a.exponent_ + b.exponent_);
}

bool operator==(const UltraNorm& a, const UltraNorm& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  require_same_base(a, b);
  return a.exponent_ == b.exponent_;
}

std::strong_ordering operator<=>(const UltraNorm& a, const UltraNorm& b) {
  if (a.is_zero() || b.is_zero()) return !a.is_zero() <=> !b.is_zero();
  require_same_base(a, b);
  return a.exponent_ <=> b.exponent_;
}

UltraNorm abs_q(const Rational& x, std::uint64_t q) {
  auto v = valuation(x, q);
  if (!v) return UltraNorm::zero();
  return UltraNorm::power(q, Rational(-*v));
}

UltraNorm norm_sqrt(const UltraNorm& n) {
  if (n.is_zero()) return n;
  return UltraNorm::power(n.base(), n.exponent() / Rational(2));
}

}  // namespace ultrameasure

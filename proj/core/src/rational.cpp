#include "ultrameasure/rational.hpp"

#include "ultrameasure/errors.hpp"

namespace ultrameasure {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string digits(text);
  std::size_t start = (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) ? 1 : 0;
  if (start == digits.size()) {
    throw InputError("malformed rational '" + std::string(whole) + "'");
  }
  for (std::size_t i = start; i < digits.size(); ++i) {
    if (digits[i] < '0' || digits[i] > '9') {
      throw InputError("malformed rational '" + std::string(whole) + "'");
    }
  }
  if (digits[0] == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(std::int64_t value) {
  mpz_class num;
  mpz_set_si(num.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(num);
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InputError("rational with zero denominator");
  mpz_class n;
  mpz_class d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw InputError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, text), mpz_class(1));
  }
  mpz_class num = parse_integer(text.substr(0, slash), text);
  mpz_class den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw InputError("rational with zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw PreconditionError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw PreconditionError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d <= q / d; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

std::optional<std::int64_t> valuation(const Rational& x, std::uint64_t q) {
  if (!is_prime(q)) throw InputError("valuation base " + std::to_string(q) + " is not prime");
  if (x.is_zero()) return std::nullopt;
  mpz_class prime;
  mpz_set_ui(prime.get_mpz_t(), static_cast<unsigned long>(q));
  mpz_class rest;
  auto up = mpz_remove(rest.get_mpz_t(), x.raw().get_num_mpz_t(), prime.get_mpz_t());
  auto down = mpz_remove(rest.get_mpz_t(), x.raw().get_den_mpz_t(), prime.get_mpz_t());
  return static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down);
}

}  // namespace ultrameasure

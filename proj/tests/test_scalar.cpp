#include <doctest.h>

#include "support.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/random.hpp"
#include "ultrameasure/rational.hpp"
#include "ultrameasure/ultranorm.hpp"

using namespace ultrameasure;
using test_support::norm5;
using test_support::r;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(10, 4).str() == "5/2");
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational::parse("-2/12") == r(-1, 6));
  CHECK(Rational::parse("7") == r(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rational::parse("abc"), InputError);
  CHECK_THROWS_AS(Rational::parse(""), InputError);
  CHECK_THROWS_AS(r(0).inverse(), PreconditionError);
  CHECK(r(2, 3).inverse() == r(3, 2));
}

TEST_CASE("valuation") {
  CHECK(valuation(r(9, 2), 3) == 2);
  CHECK_FALSE(valuation(r(0), 5).has_value());
  CHECK(valuation(r(5, 6), 5) == 1);
  CHECK(valuation(r(1, 50), 5) == -2);
  CHECK(valuation(r(-7), 5) == 0);
  CHECK_THROWS_AS(valuation(r(3), 4), InputError);
  CHECK_THROWS_AS(valuation(r(3), 1), InputError);
}

TEST_CASE("abs_q") {
  CHECK(abs_q(r(5, 6), 5) == norm5(-1));
  CHECK(abs_q(r(1, 12), 5) == UltraNorm::one(5));
  CHECK(abs_q(r(1, 50), 5) == norm5(2));
  CHECK(abs_q(r(0), 5).is_zero());
}

TEST_CASE("norm_sqrt") {
  CHECK(norm_sqrt(norm5(-1)) == norm5(-1, 2));
  CHECK(norm_sqrt(UltraNorm::zero()).is_zero());
  CHECK(norm_sqrt(norm5(2)) == norm5(1));
  auto n = norm5(-3, 7);
  CHECK(norm_sqrt(n) * norm_sqrt(n) == n);
}

TEST_CASE("UltraNorm ordering, product and text form") {
  CHECK(UltraNorm::zero() < norm5(-100));
  CHECK(norm5(-1) < UltraNorm::one(5));
  CHECK((UltraNorm::zero() * norm5(3)).is_zero());
  CHECK(norm5(1, 2) * norm5(1, 2) == norm5(1));
  CHECK(norm5(-1).str() == "5^{-1/1}");
  CHECK(UltraNorm::zero().str() == "0");
  CHECK(UltraNorm::parse("5^{-1/2}") == norm5(-1, 2));
  CHECK(UltraNorm::parse("0").is_zero());
  CHECK_THROWS_AS(UltraNorm::parse("5^x"), InputError);
  CHECK_THROWS_AS((void)(norm5(1) < UltraNorm::one(3)), std::logic_error);
}

TEST_CASE("ultrametric inequality and multiplicativity on random rationals") {
  Rng rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto x = random_rational(rng, 5, -3, 3);
    auto y = rng.chance(1, 4) ? -x + random_rational(rng, 5, 2, 4) : random_rational(rng, 5, -3, 3);
    auto nx = abs_q(x, 5), ny = abs_q(y, 5);
    auto nsum = abs_q(x + y, 5);
    CHECK(nsum <= std::max(nx, ny));
    if (nx != ny) CHECK(nsum == std::max(nx, ny));
    CHECK(abs_q(x * y, 5) == nx * ny);
    auto v = valuation(x, 5);
    REQUIRE(v.has_value());
    CHECK(test_support::same(nx, oracle::Norm::of(x.raw(), 5)));
  }
}

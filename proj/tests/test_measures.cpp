#include <doctest.h>

#include "support.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/measure.hpp"
#include "ultrameasure/random.hpp"

using namespace ultrameasure;
using test_support::norm5;
using test_support::r;

namespace {

std::vector<Element> els(std::initializer_list<std::uint32_t> idx) {
  std::vector<Element> out;
  for (auto i : idx) out.push_back(Element{i});
  return out;
}

}  // namespace

TEST_CASE("probability declaration is validated") {
  auto z3 = test_support::cyclic(3, 1);
  auto whole = Subgroup::whole(z3);
  CHECK_THROWS_AS(Measure(whole, std::map<std::uint32_t, Rational>{{0, r(1, 2)}}, true), ValidationError);
  CHECK_NOTHROW(Measure(whole, std::map<std::uint32_t, Rational>{{0, r(1, 2)}}, false));
  auto haar = Measure::haar(whole);
  CHECK(haar.total_mass() == r(1));
  CHECK(haar.is_probability(5));
  // Total mass 1 with an atom of norm 5 fails the closed-unit-ball half.
  Measure wide(whole, {{0, r(6, 5)}, {1, r(-1, 5)}}, true);
  CHECK_FALSE(wide.is_probability(5));
}

TEST_CASE("set_norm") {
  auto z3 = test_support::cyclic(3, 1);
  auto nu = test_support::nu_z3(z3);
  CHECK(set_norm(nu, els({0}), 5) == norm5(-1));
  CHECK(set_norm(nu, els({0, 1, 2}), 5) == UltraNorm::one(5));
  CHECK(set_norm(nu, {}, 5).is_zero());
  CHECK(measure_norm(nu, 5) == UltraNorm::one(5));
}

TEST_CASE("set_norm matches the exhaustive subset supremum") {
  Rng rng(3);
  for (const auto& g : {test_support::cyclic(3, 2), test_support::cyclic(2, 3)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto mu = random_measure(rng, Subgroup::whole(g), 5);
      auto values = test_support::values(mu);
      std::vector<std::uint32_t> all;
      for (auto x : g->elements()) all.push_back(x.index);
      CHECK(test_support::same(measure_norm(mu, 5), oracle::set_norm_exhaustive(all, values, 5)));
      // Disjoint union: the norm of A ∪ B is the larger of the two.
      std::vector<Element> a, b;
      for (auto x : g->elements()) (rng.chance(1, 2) ? a : b).push_back(x);
      std::vector<Element> u = a;
      u.insert(u.end(), b.begin(), b.end());
      CHECK(set_norm(mu, u, 5) == std::max(set_norm(mu, a, 5), set_norm(mu, b, 5)));
    }
  }
}

TEST_CASE("pointwise_norm") {
  auto z9 = test_support::cyclic(3, 2);
  auto haar = Measure::haar(Subgroup::whole(z9));
  for (auto x : z9->elements()) CHECK(pointwise_norm(haar, x, 5) == UltraNorm::one(5));
  auto nu = test_support::nu_z3(test_support::cyclic(3, 1));
  CHECK(pointwise_norm(nu, Element{0}, 5) == norm5(-1));
  CHECK(pointwise_norm(nu, Element{1}, 5) == UltraNorm::one(5));
  Measure holes(Subgroup::whole(z9), std::map<std::uint32_t, Rational>{{0, r(1)}});
  CHECK(pointwise_norm(holes, Element{4}, 5).is_zero());
}

TEST_CASE("translate") {
  auto z3 = test_support::cyclic(3, 1);
  auto nu = test_support::nu_z3(z3);
  auto shifted = translate(nu, Element{1}, Side::left);
  CHECK(shifted.atom(Element{0}) == r(1, 12));
  CHECK(shifted.atom(Element{1}) == r(5, 6));
  CHECK(shifted.atom(Element{2}) == r(1, 12));
  CHECK(translate(nu, z3->identity(), Side::left) == nu);
  auto h = test_support::heisenberg(3, 1);
  auto haar = Measure::haar(Subgroup::whole(h));
  Rng rng(5);
  auto mu = random_measure(rng, Subgroup::whole(h), 5);
  for (auto phi : h->elements()) {
    CHECK(translate(haar, phi, Side::left) == haar);
    CHECK(translate(haar, phi, Side::right) == haar);
    auto left = translate(mu, phi, Side::left);
    auto right = translate(mu, phi, Side::right);
    CHECK(left.total_mass() == mu.total_mass());
    CHECK(translate(left, h->inverse(phi), Side::left) == mu);
    for (auto x : h->elements()) {
      CHECK(left.atom(x) == mu.atom(h->mul(h->inverse(phi), x)));
      CHECK(right.atom(x) == mu.atom(h->mul(x, h->inverse(phi))));
    }
  }
}

TEST_CASE("radon_nikodym") {
  auto z3 = test_support::cyclic(3, 1);
  auto nu = test_support::nu_z3(z3);
  auto rho = radon_nikodym(nu, Element{1});
  CHECK(rho(Element{0}) == r(1, 10));
  CHECK(rho(Element{1}) == r(10));
  CHECK(rho(Element{2}) == r(1));
  auto h = test_support::heisenberg(3, 1);
  auto haar = Measure::haar(Subgroup::whole(h));
  for (auto phi : h->elements()) {
    auto rho_h = radon_nikodym(haar, phi);
    for (auto x : h->elements()) CHECK(rho_h(x) == r(1));
  }
  auto rho_e = radon_nikodym(nu, z3->identity());
  for (auto x : z3->elements()) CHECK(rho_e(x) == r(1));

  Measure holes(Subgroup::whole(z3), {{0, r(1)}, {1, r(0)}, {2, r(0)}}, true);
  try {
    (void)radon_nikodym(holes, Element{1});
    FAIL("expected PreconditionError");
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("quasi-invariant") != std::string::npos);
  }
}

TEST_CASE("cocycle identity and rho integral on random measures") {
  Rng rng(17);
  for (const auto& g : {test_support::cyclic(3, 2), test_support::heisenberg(3, 1)}) {
    for (int trial = 0; trial < 5; ++trial) {
      auto mu = random_measure(rng, Subgroup::whole(g), 5);
      for (auto phi : g->elements()) {
        auto rho_phi = radon_nikodym(mu, phi);
        CHECK(integrate(rho_phi, mu) == mu.total_mass());
        for (auto psi : g->elements()) {
          auto rho_psi = radon_nikodym(mu, psi);
          auto rho_prod = radon_nikodym(mu, g->mul(phi, psi));
          for (auto x : g->elements()) {
            REQUIRE(rho_prod(x) == rho_psi(g->mul(g->inverse(phi), x)) * rho_phi(x));
          }
        }
      }
    }
  }
}

TEST_CASE("integrate") {
  auto z9 = test_support::cyclic(3, 2);
  auto whole = Subgroup::whole(z9);
  Rng rng(1);
  auto mu = random_probability_measure(rng, whole, 5);
  CHECK(integrate(ScalarFunction::constant(whole, r(1)), mu) == r(1));
  auto sub = Subgroup::from_indices(z9, std::vector<std::uint32_t>{0, 3, 6});
  ScalarFunction f(sub, {{0, r(1)}, {3, r(2)}, {6, r(4)}});
  CHECK(integrate(f, Measure::haar(sub)) == r(7, 3));
  CHECK(integrate(ScalarFunction::zero(whole), mu) == r(0));
  CHECK_THROWS_AS(integrate(f, mu), InputError);
}

TEST_CASE("probability measures have pointwise norm at most one") {
  Rng rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto g = trial % 2 ? test_support::cyclic(3, 3) : test_support::heisenberg(3, 1);
    auto mu = random_probability_measure(rng, Subgroup::whole(g), 5);
    CHECK(mu.is_probability(5));
    CHECK(mu.has_full_support());
    for (auto x : g->elements()) CHECK(pointwise_norm(mu, x, 5) <= UltraNorm::one(5));
    auto sym = random_symmetric_probability_measure(rng, Subgroup::whole(g), 5);
    for (auto x : g->elements()) CHECK(sym.atom(x) == sym.atom(g->inverse(x)));
  }
}

TEST_CASE("quasi-invariance relative to a subgroup") {
  auto z9 = test_support::cyclic(3, 2);
  auto sub = Subgroup::from_indices(z9, std::vector<std::uint32_t>{0, 3, 6});
  // Zero atoms exactly on the coset 1 + 3Z/9.
  Measure mu(Subgroup::whole(z9), {{0, r(1, 6)}, {3, r(1, 6)}, {6, r(1, 6)}, {2, r(1, 6)}, {5, r(1, 6)}, {8, r(1, 6)}},
             true);
  CHECK(mu.is_quasi_invariant(sub));
  CHECK_FALSE(mu.is_quasi_invariant(Subgroup::whole(z9)));
  CHECK_FALSE(mu.has_full_support());
  CHECK_THROWS_AS(mu.require_full_support("test"), PreconditionError);
}

#include <doctest.h>

#include "support.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/group.hpp"

using namespace ultrameasure;
using test_support::cyclic;
using test_support::heisenberg;

TEST_CASE("cyclic group law") {
  auto g = cyclic(3, 2);
  CHECK(g->order() == 9);
  CHECK(group_law(*g, Element{4}, Element{7}) == Element{2});
  CHECK(inverse(*g, Element{4}) == Element{5});
  for (auto a : g->elements()) CHECK(group_law(*g, g->identity(), a) == a);
  CHECK_THROWS_AS(g->element(9), InputError);
  CHECK(g->is_abelian());
}

TEST_CASE("heisenberg group is non-abelian of order p^3") {
  auto h = heisenberg(3, 1);
  CHECK(h->order() == 27);
  CHECK_FALSE(h->is_abelian());
  bool found = false;
  for (auto a : h->elements()) {
    for (auto b : h->elements()) found = found || h->mul(a, b) != h->mul(b, a);
  }
  CHECK(found);
  auto big = heisenberg(2, 2);
  CHECK(big->order() == 64);
  CHECK_FALSE(big->is_abelian());
}

TEST_CASE("group axioms hold exhaustively and match the oracle law") {
  for (const auto& g : {cyclic(3, 1), cyclic(3, 5), cyclic(2, 3), heisenberg(3, 1), heisenberg(2, 2)}) {
    CAPTURE(g->name());
    CHECK(g->order() <= kMaxGroupOrder);
    CHECK(check_group_axioms(*g).empty());
    auto o = test_support::oracle_group(*g);
    for (auto a : g->elements()) {
      for (auto b : g->elements()) REQUIRE(g->mul(a, b).index == o.mul(a.index, b.index));
    }
  }
}

TEST_CASE("groups larger than the desk cap are rejected") {
  CHECK_THROWS_AS(FiniteGroup::cyclic(3, 6), InputError);
  CHECK_THROWS_AS(FiniteGroup::heisenberg(3, 2), InputError);
  CHECK_THROWS_AS(FiniteGroup::cyclic(4, 1), InputError);
}

TEST_CASE("table groups are validated") {
  auto klein = FiniteGroup::from_table({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
  CHECK(klein.order() == 4);
  CHECK(check_group_axioms(klein).empty());
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1}}), ValidationError);
  CHECK_THROWS_AS(FiniteGroup::from_table({}), ValidationError);
}

TEST_CASE("subgroup chains") {
  auto z9 = cyclic(3, 2);
  auto chain = SubgroupChain::standard(z9);
  CHECK(chain.sizes() == std::vector<std::size_t>{9, 3, 1});
  CHECK(SubgroupChain::from_levels(z9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}}).length() == 1);

  auto z8 = cyclic(2, 3);
  auto c8 = SubgroupChain::from_levels(z8, {{0, 1, 2, 3, 4, 5, 6, 7}, {0, 2, 4, 6}, {0, 4}});
  CHECK(c8.sizes() == std::vector<std::size_t>{8, 4, 2});

  auto h = heisenberg(3, 1);
  CHECK(SubgroupChain::standard(h).sizes() == std::vector<std::size_t>{27, 9, 3, 1});
  for (const auto& c : {SubgroupChain::standard(h), SubgroupChain::congruence(h), chain}) {
    for (std::size_t i = 0; i < c.length(); ++i) {
      const auto& level = c.level(i);
      CHECK(level.contains(c.group().identity()));
      for (auto a : level.elements()) {
        CHECK(level.contains(c.group().inverse(a)));
        for (auto b : level.elements()) CHECK(level.contains(c.group().mul(a, b)));
      }
      if (i + 1 < c.length()) CHECK(c.level(i + 1).is_contained_in(level));
    }
  }
}

TEST_CASE("invalid chains name the offending pair") {
  auto z9 = cyclic(3, 2);
  try {
    (void)SubgroupChain::from_levels(z9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}, {0, 1}});
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  CHECK_THROWS_AS(SubgroupChain::from_levels(z9, {{0, 3, 6}, {0, 1, 2, 3, 4, 5, 6, 7, 8}}), ValidationError);
  CHECK_THROWS_AS(SubgroupChain::from_levels(z9, {{3, 6}}), ValidationError);
  CHECK_THROWS_AS(SubgroupChain::from_levels(z9, {{0, 12}}), std::invalid_argument);
}

TEST_CASE("quotient projection") {
  auto z27 = cyclic(3, 3), z9 = cyclic(3, 2), z3 = cyclic(3, 1);
  CHECK(quotient_project(*z27, *z9, Element{14}) == Element{5});
  CHECK(quotient_project(*z27, *z9, Element{0}) == Element{0});
  CHECK(quotient_project(*z9, *z3, Element{7}) == Element{1});
  CHECK_THROWS_AS(quotient_project(*z9, *cyclic(2, 2), Element{1}), InputError);
  CHECK_THROWS_AS(quotient_project(*z3, *z9, Element{1}), InputError);
  for (auto a : z27->elements()) {
    for (auto b : z27->elements()) {
      CHECK(quotient_project(*z27, *z9, z27->mul(a, b)) ==
            z9->mul(quotient_project(*z27, *z9, a), quotient_project(*z27, *z9, b)));
    }
  }
}

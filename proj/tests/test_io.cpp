#include <doctest.h>

#include "support.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/json_io.hpp"
#include "ultrameasure/random.hpp"

using namespace ultrameasure;
using nlohmann::json;
using test_support::r;

TEST_CASE("scalar serialization") {
  CHECK(io::to_json(r(5, 6)) == "5/6");
  CHECK(io::to_json(r(-1, 12)) == "-1/12");
  CHECK(io::to_json(r(0)) == "0/1");
  CHECK(io::rational_from_json("3/9") == r(1, 3));
  CHECK(io::rational_from_json(json(3)) == r(3));
  CHECK_THROWS_AS(io::rational_from_json(json(1.5)), ValidationError);
  CHECK_THROWS_AS(io::rational_from_json("1/0"), ValidationError);
  CHECK(io::to_json(UltraNorm::power(5, r(-1))) == "5^{-1/1}");
  CHECK(io::to_json(UltraNorm::zero()) == "0");
}

TEST_CASE("group descriptors") {
  auto g = io::group_from_json(json::parse(R"({"kind":"cyclic","p":3,"n":2})"));
  CHECK(g->order() == 9);
  auto h = io::group_from_json(json::parse(R"({"kind":"heisenberg","p":3,"n":1})"));
  CHECK(h->order() == 27);
  auto t = io::group_from_json(json::parse(R"({"kind":"table","mul":[[0,1],[1,0]]})"));
  CHECK(t->order() == 2);
  CHECK(*io::group_from_json(io::to_json(*h)) == *h);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"kind":"dihedral"})")), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"kind":"table","mul":[[0,1],[1,1]]})")), ValidationError);
  CHECK_THROWS_AS(io::group_from_json(json::parse(R"({"kind":"cyclic","p":"3","n":2})")), ValidationError);
}

TEST_CASE("missing atoms default to zero") {
  auto mu = io::measure_from_json(
      json::parse(R"({"group":{"kind":"cyclic","p":3,"n":1},"atoms":{"0":"1/1"},"probability":true})"));
  CHECK(mu.atom(Element{0}) == r(1));
  CHECK(mu.atom(Element{1}) == r(0));
  CHECK_THROWS_AS(io::measure_from_json(json::parse(
                      R"({"group":{"kind":"cyclic","p":3,"n":1},"atoms":{"7":"1/1"},"probability":false})")),
                  ValidationError);
  CHECK_THROWS_AS(io::measure_from_json(json::parse(
                      R"({"group":{"kind":"cyclic","p":3,"n":1},"atoms":{"0":"1/2"},"probability":true})")),
                  ValidationError);
}

TEST_CASE("round trips of every generated instance") {
  Rng rng(13);
  for (const auto& g : {test_support::cyclic(3, 2), test_support::heisenberg(3, 1)}) {
    auto chain = SubgroupChain::standard(g);
    CHECK(io::chain_from_json(io::to_json(chain)) == chain);
    auto mc = std::make_shared<const MeasuredChain>(random_measured_chain(rng, chain, 5));
    for (std::size_t i = 0; i < chain.length(); ++i) {
      const auto& mu = mc->measure(i);
      CHECK(io::measure_from_json(io::to_json(mu)) == mu);
      auto f = random_function(rng, chain.level(i), 5);
      CHECK(io::function_from_json(io::to_json(f)) == f);
    }
    auto t = random_tower(rng, mc, 5);
    auto back = io::tower_from_json(io::to_json(t));
    CHECK(back.chain() == t.chain());
    CHECK(io::to_json(back) == io::to_json(t));
    auto op = Operator::identity(4);
    op.set(1, 2, r(-3, 7));
    CHECK(io::operator_from_json(io::to_json(op)) == op);
    ScalarSequence s({r(1), r(0), r(5)});
    CHECK(io::sequence_from_json(io::to_json(s)) == s);
  }
}

TEST_CASE("chain descriptors validate closure") {
  auto bad = json::parse(R"({"group":{"kind":"cyclic","p":3,"n":2},"levels":[[0,1,2,3,4,5,6,7,8],[0,1]]})");
  CHECK_THROWS_AS(io::chain_from_json(bad), ValidationError);
  auto hint = test_support::cyclic(3, 2);
  auto bare = json::parse(R"({"levels":[[0,1,2,3,4,5,6,7,8],[0,3,6]]})");
  CHECK(io::chain_from_json(bare, hint).sizes() == std::vector<std::size_t>{9, 3});
}

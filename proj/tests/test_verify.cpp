#include <doctest.h>

#include "ultrameasure/verify.hpp"

using namespace ultrameasure;

TEST_CASE("suite names round-trip") {
  for (auto s : {Suite::all, Suite::lemma2, Suite::cocycle, Suite::prop5, Suite::lemma16, Suite::note19,
                 Suite::ideals, Suite::isometry}) {
    CHECK(parse_suite(suite_name(s)) == s);
  }
  CHECK_FALSE(parse_suite("lemma99").has_value());
}

TEST_CASE("zero trials give an empty passing report") {
  auto report = run_verify(Suite::all, 1, 0);
  CHECK(report.properties.empty());
  CHECK(report.passed());
}

TEST_CASE("property families pass on their own") {
  for (auto s : {Suite::lemma2, Suite::cocycle, Suite::prop5, Suite::lemma16, Suite::ideals, Suite::isometry}) {
    CAPTURE(suite_name(s));
    auto report = run_verify(s, 3, 12);
    CHECK(report.passed());
    CHECK_FALSE(report.properties.empty());
    CHECK(std::is_sorted(report.properties.begin(), report.properties.end(),
                         [](const auto& a, const auto& b) { return a.name < b.name; }));
  }
}

TEST_CASE("note19 family: identity holds, literal bound fails with a witness") {
  auto report = run_verify(Suite::note19, 7, 30);
  for (const auto& p : report.properties) {
    CAPTURE(p.name);
    if (p.name == "note19.norm_bound") {
      CHECK(p.status == PropertyStatus::fail);
      CHECK(p.witness.contains("lhs"));
    } else {
      CHECK(p.status == PropertyStatus::pass);
    }
  }
  CHECK(report.failures() == std::vector<std::string>{"note19.norm_bound"});
}

TEST_CASE("reports are deterministic and seed dependent") {
  auto a = run_verify(Suite::all, 7, 10).to_json().dump();
  auto b = run_verify(Suite::all, 7, 10).to_json().dump();
  auto c = run_verify(Suite::all, 8, 10).to_json().dump();
  CHECK(a == b);
  CHECK(a != c);
}

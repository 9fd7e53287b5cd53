#pragma once

#include <nlohmann/json.hpp>

#include "ultrameasure/group.hpp"
#include "ultrameasure/measure.hpp"
#include "ultrameasure/rep.hpp"
#include "ultrameasure/tower.hpp"

// Instance file formats. Rationals are "num/den" strings, norms "0" or
// "q^{e}", element maps are objects keyed by decimal element index.
//
//   group     {"kind":"cyclic","p":3,"n":2} | {"kind":"heisenberg","p":3,"n":1}
//             | {"kind":"table","mul":[[...],...]}
//   chain     {"group":<group>,"levels":[[indices],...]}
//   measure   {"group":<group>,"atoms":{"0":"1/3",...},"probability":true[,"subgroup":[...]]}
//   function  {"domain":<group>,"values":{"0":"1/1",...}[,"subgroup":[...]]}
//   tower     {"chain":<chain>,"measures":[<measure>...],"components":[<function>...]}
//   operator  {"dim":n,"rows":[["num/den",...],...]}
//
// Parsers throw ValidationError on malformed input.

namespace ultrameasure::io {

using nlohmann::json;

json to_json(const Rational& r);
Rational rational_from_json(const json& j);

json to_json(const UltraNorm& n);

json to_json(const FiniteGroup& g);
/// Parses a group descriptor; reuses `hint` when it describes the same group.
GroupPtr group_from_json(const json& j, const GroupPtr& hint = nullptr);

json subset_to_json(std::span<const Element> set);
std::vector<Element> subset_from_json(const json& j, const FiniteGroup& g);

json to_json(const SubgroupChain& chain);
SubgroupChain chain_from_json(const json& j, const GroupPtr& hint = nullptr);

json to_json(const Measure& mu);
Measure measure_from_json(const json& j, const GroupPtr& hint = nullptr);

json to_json(const ScalarFunction& f);
ScalarFunction function_from_json(const json& j, const GroupPtr& hint = nullptr);

json to_json(const MeasuredChain& chain);
json to_json(const TowerElement& f);
TowerElement tower_from_json(const json& j);

json to_json(const Operator& t);
Operator operator_from_json(const json& j);

json to_json(const ScalarSequence& s);
ScalarSequence sequence_from_json(const json& j);

}  // namespace ultrameasure::io

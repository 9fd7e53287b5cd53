#include "ultrameasure/json_io.hpp"

#include <string>

#include "ultrameasure/errors.hpp"

namespace ultrameasure::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ValidationError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::uint32_t to_index(const std::string& key, const char* what) {
  if (key.empty() || key.size() > 9 ||
      key.find_first_not_of("0123456789") != std::string::npos) {
    throw ValidationError(std::string(what) + ": bad element key \"" + key + "\"");
  }
  return static_cast<std::uint32_t>(std::stoul(key));
}

std::uint32_t to_uint(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ValidationError(std::string(what) + ": expected a non-negative integer");
  }
  return j.get<std::uint32_t>();
}

json element_map(const Subgroup& domain, const auto& value_at) {
  json out = json::object();
  for (auto x : domain.elements()) out[std::to_string(x.index)] = to_json(value_at(x));
  return out;
}

std::map<std::uint32_t, Rational> element_map_from_json(const json& j, const char* what) {
  if (!j.is_object()) throw ValidationError(std::string(what) + ": expected an object");
  std::map<std::uint32_t, Rational> out;
  for (const auto& [key, value] : j.items()) out[to_index(key, what)] = rational_from_json(value);
  return out;
}

Subgroup domain_from_json(const json& j, const GroupPtr& group) {
  if (!j.contains("subgroup")) return Subgroup::whole(group);
  std::vector<std::uint32_t> indices;
  for (const auto& e : j.at("subgroup")) indices.push_back(to_uint(e, "subgroup"));
  return Subgroup::from_indices(group, indices);
}

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const InputError& err) {
      throw ValidationError(err.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ValidationError("rational: expected a \"num/den\" string");
}

json to_json(const UltraNorm& n) { return n.str(); }

json to_json(const FiniteGroup& g) {
  switch (g.kind()) {
    case GroupKind::cyclic:
      return {{"kind", "cyclic"}, {"p", g.p()}, {"n", g.n()}};
    case GroupKind::heisenberg:
      return {{"kind", "heisenberg"}, {"p", g.p()}, {"n", g.n()}};
    case GroupKind::table:
      break;
  }
  json rows = json::array();
  const auto n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < n; ++b) row.push_back(g.cayley_table()[a * n + b]);
    rows.push_back(std::move(row));
  }
  return {{"kind", "table"}, {"mul", std::move(rows)}};
}

GroupPtr group_from_json(const json& j, const GroupPtr& hint) {
  const auto kind = field(j, "kind", "group").get<std::string>();
  FiniteGroup parsed = [&] {
    try {
      if (kind == "cyclic") {
        return FiniteGroup::cyclic(to_uint(field(j, "p", "group"), "p"),
                                   to_uint(field(j, "n", "group"), "n"));
      }
      if (kind == "heisenberg") {
        return FiniteGroup::heisenberg(to_uint(field(j, "p", "group"), "p"),
                                       to_uint(field(j, "n", "group"), "n"));
      }
      if (kind == "table") {
        std::vector<std::vector<std::uint32_t>> table;
        for (const auto& row : field(j, "mul", "group")) {
          std::vector<std::uint32_t> r;
          for (const auto& v : row) r.push_back(to_uint(v, "mul"));
          table.push_back(std::move(r));
        }
        return FiniteGroup::from_table(std::move(table));
      }
    } catch (const InputError& err) {
      throw ValidationError(std::string("group: ") + err.what());
    }
    throw ValidationError("group: unknown kind \"" + kind + "\"");
  }();
  if (hint && *hint == parsed) return hint;
  return std::make_shared<const FiniteGroup>(std::move(parsed));
}

json subset_to_json(std::span<const Element> set) {
  json out = json::array();
  for (auto x : set) out.push_back(x.index);
  return out;
}

std::vector<Element> subset_from_json(const json& j, const FiniteGroup& g) {
  if (!j.is_array()) throw ValidationError("subset: expected an index array");
  std::vector<Element> out;
  for (const auto& v : j) {
    auto index = to_uint(v, "subset");
    if (index >= g.order()) throw ValidationError("subset: index " + std::to_string(index) + " out of range");
    out.push_back(Element{index});
  }
  return out;
}

json to_json(const SubgroupChain& chain) {
  json levels = json::array();
  for (const auto& level : chain.levels()) levels.push_back(subset_to_json(level.elements()));
  return {{"group", to_json(chain.group())}, {"levels", std::move(levels)}};
}

SubgroupChain chain_from_json(const json& j, const GroupPtr& hint) {
  // A bare {"levels": ...} descriptor borrows the caller's group.
  auto group = (hint && j.is_object() && !j.contains("group")) ? hint : group_from_json(field(j, "group", "chain"), hint);
  std::vector<std::vector<std::uint32_t>> levels;
  for (const auto& level : field(j, "levels", "chain")) {
    std::vector<std::uint32_t> indices;
    for (const auto& v : level) indices.push_back(to_uint(v, "chain level"));
    levels.push_back(std::move(indices));
  }
  try {
    return SubgroupChain::from_levels(group, levels);
  } catch (const InputError& err) {
    throw ValidationError(std::string("chain: ") + err.what());
  }
}

json to_json(const Measure& mu) {
  json out = {{"group", to_json(mu.group())},
              {"atoms", element_map(mu.domain(), [&](Element x) { return mu.atom(x); })},
              {"probability", mu.declared_probability()}};
  if (!mu.domain().is_whole()) out["subgroup"] = subset_to_json(mu.domain().elements());
  return out;
}

Measure measure_from_json(const json& j, const GroupPtr& hint) {
  auto group = group_from_json(field(j, "group", "measure"), hint);
  auto domain = domain_from_json(j, group);
  auto atoms = element_map_from_json(field(j, "atoms", "measure"), "measure atoms");
  const bool probability = j.value("probability", false);
  try {
    return Measure(std::move(domain), atoms, probability);
  } catch (const InputError& err) {
    throw ValidationError(std::string("measure: ") + err.what());
  }
}

json to_json(const ScalarFunction& f) {
  json out = {{"domain", to_json(f.group())},
              {"values", element_map(f.domain(), [&](Element x) { return f(x); })}};
  if (!f.domain().is_whole()) out["subgroup"] = subset_to_json(f.domain().elements());
  return out;
}

ScalarFunction function_from_json(const json& j, const GroupPtr& hint) {
  auto group = group_from_json(field(j, "domain", "function"), hint);
  auto domain = domain_from_json(j, group);
  auto values = element_map_from_json(field(j, "values", "function"), "function values");
  try {
    return ScalarFunction(std::move(domain), values);
  } catch (const InputError& err) {
    throw ValidationError(std::string("function: ") + err.what());
  }
}

json to_json(const MeasuredChain& chain) {
  json measures = json::array();
  for (const auto& mu : chain.measures()) measures.push_back(to_json(mu));
  return {{"chain", to_json(chain.chain())}, {"measures", std::move(measures)}};
}

json to_json(const TowerElement& f) {
  json out = to_json(f.chain());
  json components = json::array();
  for (const auto& c : f.components()) components.push_back(to_json(c));
  out["components"] = std::move(components);
  return out;
}

TowerElement tower_from_json(const json& j) {
  auto chain = chain_from_json(field(j, "chain", "tower"));
  const auto& group = chain.group_ptr();
  std::vector<Measure> measures;
  for (const auto& m : field(j, "measures", "tower")) measures.push_back(measure_from_json(m, group));
  std::vector<ScalarFunction> components;
  for (const auto& c : field(j, "components", "tower")) {
    components.push_back(function_from_json(c, group));
  }
  try {
    auto measured = std::make_shared<const MeasuredChain>(std::move(chain), std::move(measures));
    return TowerElement(std::move(measured), std::move(components));
  } catch (const InputError& err) {
    throw ValidationError(std::string("tower: ") + err.what());
  }
}

json to_json(const Operator& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.dim(); ++c) row.push_back(to_json(t.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"dim", t.dim()}, {"rows", std::move(rows)}};
}

Operator operator_from_json(const json& j) {
  const auto dim = to_uint(field(j, "dim", "operator"), "dim");
  const auto& rows = field(j, "rows", "operator");
  if (!rows.is_array() || rows.size() != dim) throw ValidationError("operator: row count differs from dim");
  std::vector<Rational> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) throw ValidationError("operator: row length differs from dim");
    for (const auto& v : row) entries.push_back(rational_from_json(v));
  }
  return Operator(dim, std::move(entries));
}

json to_json(const ScalarSequence& s) {
  json out = json::array();
  for (const auto& v : s.entries()) out.push_back(to_json(v));
  return out;
}

ScalarSequence sequence_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("sequence: expected an array");
  std::vector<Rational> entries;
  for (const auto& v : j) entries.push_back(rational_from_json(v));
  return ScalarSequence(std::move(entries));
}

}  // namespace ultrameasure::io

#include "ultrameasure/group.hpp"

#include <algorithm>

#include "ultrameasure/errors.hpp"
#include "ultrameasure/rational.hpp"

namespace ultrameasure {

namespace {

std::uint32_t checked_modulus(std::uint32_t p, std::uint32_t n, std::uint32_t power) {
  if (!is_prime(p)) throw InputError("group parameter p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw InputError("group parameter n must be at least 1");
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    modulus *= p;
    if (modulus > kMaxGroupOrder) break;
  }
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < power && order <= kMaxGroupOrder; ++i) order *= modulus;
  if (order > kMaxGroupOrder) {
    throw InputError("group order exceeds the supported maximum of " +
                     std::to_string(kMaxGroupOrder));
  }
  return static_cast<std::uint32_t>(modulus);
}

struct HeisenbergCoords {
  std::uint32_t a, b, c;
};

HeisenbergCoords coords(std::uint32_t index, std::uint32_t m) {
  return {index % m, (index / m) % m, index / (m * m)};
}

std::uint32_t heisenberg_index(HeisenbergCoords x, std::uint32_t m) {
  return x.a + m * x.b + m * m * x.c;
}

}  // namespace

FiniteGroup FiniteGroup::cyclic(std::uint32_t p, std::uint32_t n) {
  FiniteGroup g;
  g.kind_ = GroupKind::cyclic;
  g.p_ = p;
  g.n_ = n;
  g.modulus_ = checked_modulus(p, n, 1);
  g.order_ = g.modulus_;
  const auto m = g.modulus_;
  g.table_.resize(std::size_t{m} * m);
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) g.table_[std::size_t{a} * m + b] = (a + b) % m;
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::heisenberg(std::uint32_t p, std::uint32_t n) {
  FiniteGroup g;
  g.kind_ = GroupKind::heisenberg;
  g.p_ = p;
  g.n_ = n;
  g.modulus_ = checked_modulus(p, n, 3);
  const auto m = g.modulus_;
  g.order_ = std::size_t{m} * m * m;
  g.table_.resize(g.order_ * g.order_);
  for (std::uint32_t x = 0; x < g.order_; ++x) {
    const auto u = coords(x, m);
    for (std::uint32_t y = 0; y < g.order_; ++y) {
      const auto v = coords(y, m);
      // [[1,a,c],[0,1,b],[0,0,1]] * [[1,a',c'],[0,1,b'],[0,0,1]]
      HeisenbergCoords w{(u.a + v.a) % m, (u.b + v.b) % m, (u.c + v.c + u.a * v.b) % m};
      g.table_[std::size_t{x} * g.order_ + y] = heisenberg_index(w, m);
    }
  }
  g.finish();
  return g;
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::uint32_t>> table) {
  const auto order = table.size();
  if (order == 0) throw ValidationError("multiplication table is empty");
  if (order > kMaxGroupOrder) {
    throw InputError("group order exceeds the supported maximum of " +
                     std::to_string(kMaxGroupOrder));
  }
  FiniteGroup g;
  g.kind_ = GroupKind::table;
  g.order_ = order;
  g.table_.reserve(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    if (table[a].size() != order) {
      throw ValidationError("multiplication table row " + std::to_string(a) + " has " +
                            std::to_string(table[a].size()) + " entries, expected " +
                            std::to_string(order));
    }
    for (auto v : table[a]) {
      if (v >= order) {
        throw ValidationError("multiplication table entry " + std::to_string(v) +
                              " out of range in row " + std::to_string(a));
      }
      g.table_.push_back(v);
    }
  }
  // Identity: the row that reproduces the column index.
  bool found = false;
  for (std::uint32_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::uint32_t b = 0; b < order && ok; ++b) {
      ok = g.table_[std::size_t{e} * order + b] == b && g.table_[std::size_t{b} * order + e] == b;
    }
    if (ok) {
      g.identity_ = Element{e};
      found = true;
    }
  }
  if (!found) throw ValidationError("multiplication table has no two-sided identity");
  g.inverse_.assign(order, static_cast<std::uint32_t>(order));
  for (std::uint32_t a = 0; a < order; ++a) {
    for (std::uint32_t b = 0; b < order; ++b) {
      if (g.table_[std::size_t{a} * order + b] == g.identity_.index &&
          g.table_[std::size_t{b} * order + a] == g.identity_.index) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] == order) {
      throw ValidationError("element " + std::to_string(a) + " has no inverse");
    }
  }
  if (auto failure = check_group_axioms(g); !failure.empty()) throw ValidationError(failure);
  return g;
}

void FiniteGroup::finish() {
  identity_ = Element{0};
  inverse_.assign(order_, 0);
  for (std::uint32_t a = 0; a < order_; ++a) {
    for (std::uint32_t b = 0; b < order_; ++b) {
      if (table_[std::size_t{a} * order_ + b] == identity_.index) {
        inverse_[a] = b;
        break;
      }
    }
  }
}

Element FiniteGroup::element(std::uint32_t index) const {
  if (index >= order_) {
    throw InputError("element index " + std::to_string(index) + " is outside " + name() +
                     " of order " + std::to_string(order_));
  }
  return Element{index};
}

Element FiniteGroup::mul(Element a, Element b) const {
  element(a.index);
  element(b.index);
  return Element{table_[std::size_t{a.index} * order_ + b.index]};
}

Element FiniteGroup::inverse(Element a) const {
  element(a.index);
  return Element{inverse_[a.index]};
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
    }
  }
  return true;
}

std::vector<Element> FiniteGroup::elements() const {
  std::vector<Element> out(order_);
  for (std::uint32_t i = 0; i < order_; ++i) out[i] = Element{i};
  return out;
}

std::string FiniteGroup::name() const {
  switch (kind_) {
    case GroupKind::cyclic:
      return "cyclic(" + std::to_string(p_) + "," + std::to_string(n_) + ")";
    case GroupKind::heisenberg:
      return "heisenberg(" + std::to_string(p_) + "," + std::to_string(n_) + ")";
    case GroupKind::table:
      break;
  }
  return "table(" + std::to_string(order_) + ")";
}

std::string FiniteGroup::label(Element a) const {
  if (kind_ == GroupKind::heisenberg) {
    auto x = coords(a.index, modulus_);
    return "(" + std::to_string(x.a) + "," + std::to_string(x.b) + "," + std::to_string(x.c) + ")";
  }
  return std::to_string(a.index);
}

std::string check_group_axioms(const FiniteGroup& g) {
  const auto n = g.order();
  const auto& t = g.cayley_table();
  const auto e = g.identity().index;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (t[std::size_t{a} * n + e] != a || t[std::size_t{e} * n + a] != a) {
      return "identity law fails at element " + std::to_string(a);
    }
    const auto inv = g.inverse(Element{a}).index;
    if (t[std::size_t{a} * n + inv] != e || t[std::size_t{inv} * n + a] != e) {
      return "inverse law fails at element " + std::to_string(a);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
        }
      }
    }
  }
  return {};
}

// Subgroup ------------------------------------------------------------------

Subgroup::Subgroup(GroupPtr group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)), mask_(group_->order(), false) {
  for (auto x : elements_) mask_[x.index] = true;
}

Subgroup Subgroup::whole(GroupPtr group) {
  auto elements = group->elements();
  return Subgroup(std::move(group), std::move(elements));
}

Subgroup Subgroup::trivial(GroupPtr group) {
  auto e = group->identity();
  return Subgroup(std::move(group), {e});
}

Subgroup Subgroup::from_indices(GroupPtr group, std::span<const std::uint32_t> indices) {
  if (!group) throw InputError("subgroup of a null group");
  std::vector<Element> elements;
  elements.reserve(indices.size());
  for (auto i : indices) elements.push_back(group->element(i));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup s(group, std::move(elements));
  if (!s.contains(group->identity())) {
    throw ValidationError("subset does not contain the identity " + group->label(group->identity()));
  }
  for (auto a : s.elements_) {
    if (!s.contains(group->inverse(a))) {
      throw ValidationError("subset not closed under inverse: " + std::to_string(a.index) +
                            "^-1 = " + std::to_string(group->inverse(a).index));
    }
    for (auto b : s.elements_) {
      auto ab = group->mul(a, b);
      if (!s.contains(ab)) {
        throw ValidationError("subset not closed under the group law: " + std::to_string(a.index) +
                              "*" + std::to_string(b.index) + " = " + std::to_string(ab.index));
      }
    }
  }
  return s;
}

bool Subgroup::is_contained_in(const Subgroup& other) const {
  if (*group_ != *other.group_) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element x) { return other.contains(x); });
}

std::vector<std::uint32_t> Subgroup::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(elements_.size());
  for (auto x : elements_) out.push_back(x.index);
  return out;
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  return (a.group_ == b.group_ || *a.group_ == *b.group_) && a.elements_ == b.elements_;
}

// SubgroupChain ---------------------------------------------------------------

SubgroupChain SubgroupChain::from_subgroups(std::vector<Subgroup> levels) {
  if (levels.empty()) throw ValidationError("subgroup chain needs at least one level");
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (*levels[i + 1].group_ptr() != *levels[i].group_ptr()) {
      throw ValidationError("chain levels live in different groups");
    }
    if (!levels[i + 1].is_contained_in(levels[i])) {
      throw ValidationError("chain level " + std::to_string(i + 1) + " is not contained in level " +
                            std::to_string(i));
    }
  }
  return SubgroupChain(std::move(levels));
}

SubgroupChain SubgroupChain::from_levels(GroupPtr group,
                                         const std::vector<std::vector<std::uint32_t>>& levels) {
  std::vector<Subgroup> subgroups;
  subgroups.reserve(levels.size());
  for (std::size_t i = 0; i < levels.size(); ++i) {
    try {
      subgroups.push_back(Subgroup::from_indices(group, levels[i]));
    } catch (const ValidationError& err) {
      throw ValidationError("chain level " + std::to_string(i) + ": " + err.what());
    }
  }
  return from_subgroups(std::move(subgroups));
}

SubgroupChain SubgroupChain::standard(GroupPtr group) {
  std::vector<std::vector<std::uint32_t>> levels;
  const auto m = group->modulus();
  switch (group->kind()) {
    case GroupKind::cyclic: {
      std::uint32_t step = 1;
      for (std::uint32_t i = 0; i <= group->n(); ++i) {
        std::vector<std::uint32_t> level;
        for (std::uint32_t k = 0; k < m; k += step) level.push_back(k);
        levels.push_back(std::move(level));
        step *= group->p();
      }
      break;
    }
    case GroupKind::heisenberg: {
      std::vector<std::uint32_t> no_a;
      std::vector<std::uint32_t> center;
      for (std::uint32_t x = 0; x < group->order(); ++x) {
        auto c = coords(x, m);
        if (c.a == 0) no_a.push_back(x);
        if (c.a == 0 && c.b == 0) center.push_back(x);
      }
      auto all = group->elements();
      std::vector<std::uint32_t> whole;
      for (auto e : all) whole.push_back(e.index);
      levels = {whole, no_a, center, {group->identity().index}};
      break;
    }
    case GroupKind::table: {
      std::vector<std::uint32_t> whole;
      for (auto e : group->elements()) whole.push_back(e.index);
      levels = {whole, {group->identity().index}};
      break;
    }
  }
  return from_levels(std::move(group), levels);
}

SubgroupChain SubgroupChain::congruence(GroupPtr group) {
  if (group->kind() != GroupKind::heisenberg) {
    throw InputError("congruence chains are defined for heisenberg groups only");
  }
  const auto m = group->modulus();
  std::vector<std::vector<std::uint32_t>> levels;
  std::uint32_t step = 1;
  for (std::uint32_t k = 0; k <= group->n(); ++k) {
    std::vector<std::uint32_t> level;
    for (std::uint32_t x = 0; x < group->order(); ++x) {
      auto c = coords(x, m);
      if (c.a % step == 0 && c.b % step == 0 && c.c % step == 0) level.push_back(x);
    }
    levels.push_back(std::move(level));
    step *= group->p();
  }
  return from_levels(std::move(group), levels);
}

std::vector<std::size_t> SubgroupChain::sizes() const {
  std::vector<std::size_t> out;
  for (const auto& level : levels_) out.push_back(level.size());
  return out;
}

Element quotient_project(const FiniteGroup& fine, const FiniteGroup& coarse, Element a) {
  if (fine.kind() != GroupKind::cyclic || coarse.kind() != GroupKind::cyclic) {
    throw InputError("quotient_project needs two cyclic groups");
  }
  if (fine.p() != coarse.p()) {
    throw InputError("quotient_project: mismatched primes " + std::to_string(fine.p()) + " and " +
                     std::to_string(coarse.p()));
  }
  if (fine.n() < coarse.n()) throw InputError("quotient_project: target is finer than source");
  fine.element(a.index);
  return Element{a.index % coarse.modulus()};
}

}  // namespace ultrameasure

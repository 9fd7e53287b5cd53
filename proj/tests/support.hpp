#pragma once

#include <memory>
#include <string>

#include "oracle.hpp"
#include "ultrameasure/measure.hpp"
#include "ultrameasure/ultranorm.hpp"

namespace test_support {

namespace um = ultrameasure;

inline um::GroupPtr cyclic(std::uint32_t p, std::uint32_t n) {
  return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::cyclic(p, n));
}

inline um::GroupPtr heisenberg(std::uint32_t p, std::uint32_t n) {
  return std::make_shared<const um::FiniteGroup>(um::FiniteGroup::heisenberg(p, n));
}

inline oracle::Group oracle_group(const um::FiniteGroup& g) {
  return {g.kind() == um::GroupKind::heisenberg, g.modulus()};
}

inline std::vector<bool> mask(const um::Subgroup& s) {
  std::vector<bool> m(s.group().order(), false);
  for (auto x : s.elements()) m[x.index] = true;
  return m;
}

inline oracle::Values values(const um::ScalarFunction& f) {
  oracle::Values v(f.group().order(), 0);
  for (auto x : f.domain().elements()) v[x.index] = f(x).raw();
  return v;
}

inline oracle::Values values(const um::Measure& mu) {
  oracle::Values v(mu.group().order(), 0);
  for (auto x : mu.domain().elements()) v[x.index] = mu.atom(x).raw();
  return v;
}

inline bool same(const um::UltraNorm& n, const oracle::Norm& o) {
  if (n.is_zero() || o.zero) return n.is_zero() && o.zero;
  return n.exponent().raw() == o.exponent;
}

inline um::Rational r(std::int64_t num, std::int64_t den = 1) { return um::Rational(num, den); }

inline um::UltraNorm norm5(std::int64_t num, std::int64_t den = 1) { return um::UltraNorm::power(5, r(num, den)); }

/// ν on Z/3 with atoms (5/6, 1/12, 1/12).
inline um::Measure nu_z3(const um::GroupPtr& z3) {
  return um::Measure(um::Subgroup::whole(z3), {{0, r(5, 6)}, {1, r(1, 12)}, {2, r(1, 12)}}, true);
}

}  // namespace test_support

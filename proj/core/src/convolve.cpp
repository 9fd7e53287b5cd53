#include "ultrameasure/convolve.hpp"

#include <algorithm>

#include "ultrameasure/errors.hpp"

namespace ultrameasure {

namespace {

void require_subgroup(const Subgroup& inner, const Subgroup& outer, const char* what) {
  if (!inner.is_contained_in(outer)) {
    throw InputError(std::string(what) + ": inner domain is not a subgroup of the outer domain");
  }
}

std::vector<bool> membership(const FiniteGroup& g, std::span<const Element> set) {
  std::vector<bool> mask(g.order(), false);
  for (auto x : set) mask[g.element(x.index).index] = true;
  return mask;
}

}  // namespace

Measure convolve_measures(const Measure& nu, const Measure& mu) {
  require_subgroup(nu.domain(), mu.domain(), "convolve_measures");
  const auto& g = mu.group();
  std::vector<Rational> atoms(g.order());
  for (auto x : mu.domain().elements()) {
    Rational sum;
    for (auto h : nu.domain().elements()) {
      const auto& weight = nu.atom(h);
      if (weight.is_zero()) continue;
      sum += weight * mu.atom(g.mul(g.inverse(h), x));
    }
    atoms[x.index] = std::move(sum);
  }
  return Measure(mu.domain(), std::move(atoms),
                 nu.declared_probability() && mu.declared_probability());
}

ScalarFunction convolve_functions(const ScalarFunction& q, const ScalarFunction& f,
                                  const Measure& nu) {
  if (!(q.domain() == nu.domain())) throw InputError("convolve_functions: q and ν domains differ");
  require_subgroup(nu.domain(), f.domain(), "convolve_functions");
  const auto& g = f.group();
  ScalarFunction out(f.domain());
  for (auto x : f.domain().elements()) {
    Rational sum;
    for (auto h : nu.domain().elements()) {
      auto weight = q(h) * nu.atom(h);
      if (weight.is_zero()) continue;
      sum += f(g.mul(h, x)) * weight;
    }
    out.set(x, std::move(sum));
  }
  return out;
}

ScalarFunction level_convolve(const ScalarFunction& f_next, const ScalarFunction& f,
                              const Measure& mu_next) {
  if (!mu_next.declared_probability()) {
    throw InputError("level_convolve: the level measure must be a probability measure");
  }
  if (!(f_next.domain() == mu_next.domain())) {
    throw InputError("level_convolve: f_next and μ_next domains differ");
  }
  require_subgroup(mu_next.domain(), f.domain(), "level_convolve");
  const auto& g = f.group();
  ScalarFunction out(f.domain());
  for (auto x : f.domain().elements()) {
    Rational sum;
    for (auto y : mu_next.domain().elements()) {
      auto weight = f_next(y) * mu_next.atom(y);
      if (weight.is_zero()) continue;
      sum += weight * f(g.mul(g.inverse(y), x));
    }
    out.set(x, std::move(sum));
  }
  return out;
}

UltraNorm norm_L(const ScalarFunction& f, const Measure& mu, std::uint64_t q) {
  if (!(f.domain() == mu.domain())) throw InputError("norm_L: domain mismatch");
  UltraNorm best;
  for (auto x : f.domain().elements()) {
    best = std::max(best, abs_q(f(x), q) * pointwise_norm(mu, x, q));
  }
  return best;
}

UltraNorm norm_LH(const ScalarFunction& f, const Measure& mu, const Subgroup& h, std::uint64_t q) {
  require_subgroup(h, f.domain(), "norm_LH");
  UltraNorm best;
  for (auto s : h.elements()) best = std::max(best, norm_L(f.left_translate(s), mu, q));
  return best;
}

LevelNorms norm_Hi(const ScalarFunction& f, const Measure& mu_i, const Measure& mu_next,
                   std::uint64_t q) {
  if (!(f.domain() == mu_i.domain())) throw InputError("norm_Hi: f and μ_i domains differ");
  require_subgroup(mu_next.domain(), mu_i.domain(), "norm_Hi");
  const auto& g = f.group();
  const auto one = UltraNorm::one(q);

  UltraNorm squared;
  for (auto x : f.domain().elements()) {
    auto a = abs_q(f(x), q);
    squared = std::max(squared, a * a * pointwise_norm(mu_i, x, q));
  }

  UltraNorm primed_squared;
  for (auto y : mu_next.domain().elements()) {
    const auto weight = std::max(one, pointwise_norm(mu_next, y, q));
    const auto y_inv = g.inverse(y);
    for (auto x : f.domain().elements()) {
      auto a = abs_q(f(g.mul(y_inv, x)), q);
      primed_squared = std::max(primed_squared, a * a * pointwise_norm(mu_i, x, q) * weight);
    }
  }

  LevelNorms out;
  out.square_part = norm_sqrt(squared);
  out.primed = norm_sqrt(primed_squared);
  out.level = std::max(out.square_part, out.primed);
  return out;
}

LevelNorms norm_Hi(const ScalarFunction& f, const Measure& mu_i, std::uint64_t q) {
  auto top = Subgroup::trivial(mu_i.domain().group_ptr());
  auto e = top.group().identity();
  return norm_Hi(f, mu_i, Measure::point_mass(std::move(top), e), q);
}

ScalarFunction approximate_unit(const SubgroupChain& chain, const Measure& nu, std::size_t i) {
  if (i >= chain.length()) throw InputError("approximate_unit: level index out of range");
  if (!(nu.domain() == chain.level(0))) {
    throw InputError("approximate_unit: ν must live on the chain's level 0");
  }
  const auto& level = chain.level(i);
  auto mass = nu.mass(level.elements());
  if (mass.is_zero()) {
    throw PreconditionError("approximate_unit: ν(U_" + std::to_string(i) +
                            ") = 0, degenerate support");
  }
  return mass.inverse() * ScalarFunction::indicator(nu.domain(), level.elements());
}

ScalarFunction zeta(std::span<const Element> a, std::span<const Element> b, const Measure& mu) {
  const auto& g = mu.group();
  const auto in_a = membership(g, a);
  ScalarFunction out(mu.domain());
  for (auto x : mu.domain().elements()) {
    // A ∩ xB, without double counting repeated members of B.
    std::vector<bool> seen(g.order(), false);
    Rational sum;
    for (auto y : b) {
      auto xy = g.mul(x, y);
      if (in_a[xy.index] && !seen[xy.index]) {
        seen[xy.index] = true;
        sum += mu.atom_or_zero(xy);
      }
    }
    out.set(x, std::move(sum));
  }
  return out;
}

std::vector<Element> product_set(const FiniteGroup& g, std::span<const Element> a,
                                 std::span<const Element> b) {
  std::vector<bool> hit(g.order(), false);
  for (auto x : a) {
    for (auto y : b) hit[g.mul(x, y).index] = true;
  }
  std::vector<Element> out;
  for (std::uint32_t i = 0; i < hit.size(); ++i) {
    if (hit[i]) out.push_back(Element{i});
  }
  return out;
}

std::vector<Element> positive_intersection_set(std::span<const Element> a,
                                               std::span<const Element> b, const Measure& mu,
                                               std::uint64_t q) {
  const auto& g = mu.group();
  const auto in_a = membership(g, a);
  std::vector<Element> out;
  for (auto x : g.elements()) {
    std::vector<Element> meet;
    for (auto y : b) {
      auto candidate = g.mul(x, g.inverse(y));
      if (in_a[candidate.index]) meet.push_back(candidate);
    }
    if (!set_norm(mu, meet, q).is_zero()) out.push_back(x);
  }
  return out;
}

}  // namespace ultrameasure

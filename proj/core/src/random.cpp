#include "ultrameasure/random.hpp"

#include "ultrameasure/errors.hpp"

namespace ultrameasure {

namespace {

std::int64_t prime_to(Rng& rng, std::uint64_t q) {
  for (;;) {
    auto v = static_cast<std::int64_t>(rng.below(9) + 1);
    if (static_cast<std::uint64_t>(v) % q != 0) return v;
  }
}

Rational power_of(std::uint64_t q, int k) {
  Rational base(static_cast<std::int64_t>(q));
  Rational out(1);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= base;
  return k < 0 ? out.inverse() : out;
}

}  // namespace

Rational random_rational(Rng& rng, std::uint64_t q, int min_power, int max_power) {
  const auto span = static_cast<std::uint64_t>(max_power - min_power + 1);
  const int k = min_power + static_cast<int>(rng.below(span));
  const auto u = prime_to(rng, q);
  const auto d = prime_to(rng, q);
  Rational v = Rational(rng.chance(1, 2) ? u : -u, d) * power_of(q, k);
  return v;
}

ScalarFunction random_function(Rng& rng, const Subgroup& domain, std::uint64_t q) {
  ScalarFunction f(domain);
  for (auto x : domain.elements()) {
    if (rng.chance(1, 8)) continue;
    f.set(x, random_rational(rng, q));
  }
  return f;
}

Measure random_measure(Rng& rng, const Subgroup& domain, std::uint64_t q) {
  std::vector<Rational> atoms(domain.group().order());
  for (auto x : domain.elements()) atoms[x.index] = random_rational(rng, q);
  return Measure(domain, std::move(atoms));
}

Measure random_probability_measure(Rng& rng, const Subgroup& domain, std::uint64_t q) {
  const auto e = domain.group().identity();
  for (;;) {
    std::vector<Rational> atoms(domain.group().order());
    Rational rest;
    for (auto x : domain.elements()) {
      if (x == e) continue;
      atoms[x.index] = random_rational(rng, q, 0, 2);
      rest += atoms[x.index];
    }
    atoms[e.index] = Rational(1) - rest;
    if (atoms[e.index].is_zero()) continue;
    return Measure(domain, std::move(atoms), true);
  }
}

Measure random_symmetric_probability_measure(Rng& rng, const Subgroup& domain, std::uint64_t q) {
  const auto& g = domain.group();
  const auto e = g.identity();
  for (;;) {
    std::vector<Rational> atoms(g.order());
    std::vector<bool> done(g.order(), false);
    Rational rest;
    for (auto x : domain.elements()) {
      if (x == e || done[x.index]) continue;
      const auto x_inv = g.inverse(x);
      auto v = random_rational(rng, q, 0, 2);
      atoms[x.index] = v;
      rest += v;
      done[x.index] = true;
      if (x_inv != x) {
        atoms[x_inv.index] = v;
        rest += v;
        done[x_inv.index] = true;
      }
    }
    atoms[e.index] = Rational(1) - rest;
    if (atoms[e.index].is_zero()) continue;
    return Measure(domain, std::move(atoms), true);
  }
}

MeasuredChain random_measured_chain(Rng& rng, SubgroupChain chain, std::uint64_t q) {
  std::vector<Measure> measures;
  for (const auto& level : chain.levels()) {
    measures.push_back(random_probability_measure(rng, level, q));
  }
  return MeasuredChain(std::move(chain), std::move(measures));
}

TowerElement random_tower(Rng& rng, MeasuredChainPtr chain, std::uint64_t q) {
  std::vector<ScalarFunction> components;
  for (const auto& level : chain->chain().levels()) {
    components.push_back(random_function(rng, level, q));
  }
  return TowerElement(std::move(chain), std::move(components));
}

}  // namespace ultrameasure

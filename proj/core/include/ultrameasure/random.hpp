#pragma once

#include <cstdint>
#include <random>

#include "ultrameasure/measure.hpp"
#include "ultrameasure/tower.hpp"

namespace ultrameasure {

/// Seeded source for every generator in the library. mt19937_64 is fully
/// specified by the standard, and draws avoid the implementation-defined
/// std distributions, so a seed reproduces the same instances everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, n).
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return below(denominator) < numerator;
  }

 private:
  std::mt19937_64 engine_;
};

/// ±u q^k / D with u, D in [1, 9] prime to q and k ∈ [min_power, max_power].
Rational random_rational(Rng& rng, std::uint64_t q, int min_power = -1, int max_power = 2);

/// Random function with values from random_rational; each value is zero with
/// probability 1/8.
ScalarFunction random_function(Rng& rng, const Subgroup& domain, std::uint64_t q);

/// Random measure with no zero atom and atoms of every size (not normalized).
Measure random_measure(Rng& rng, const Subgroup& domain, std::uint64_t q);

/// Random probability measure with no zero atom: atoms u q^k / D with k ∈ {0,1,2},
/// the identity's atom completing the mass to 1. Every atom has |.|_q <= 1.
Measure random_probability_measure(Rng& rng, const Subgroup& domain, std::uint64_t q);

/// As random_probability_measure, with μ(x) = μ(x⁻¹) for every x.
Measure random_symmetric_probability_measure(Rng& rng, const Subgroup& domain, std::uint64_t q);

/// Random probability measure on every level of a chain.
MeasuredChain random_measured_chain(Rng& rng, SubgroupChain chain, std::uint64_t q);

/// Random components on every level.
TowerElement random_tower(Rng& rng, MeasuredChainPtr chain, std::uint64_t q);

}  // namespace ultrameasure

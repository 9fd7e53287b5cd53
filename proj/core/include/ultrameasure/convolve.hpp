#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ultrameasure/group.hpp"
#include "ultrameasure/measure.hpp"
#include "ultrameasure/ultranorm.hpp"

namespace ultrameasure {

/// (ν∗μ)(x) = Σ_{h∈H} ν(h) μ(h⁻¹x), ν on a subgroup H of μ's domain.
Measure convolve_measures(const Measure& nu, const Measure& mu);

/// (q∗̃f)(g) = Σ_{h∈H} f(hg) q(h) ν(h), with q and ν on a subgroup H of f's domain.
ScalarFunction convolve_functions(const ScalarFunction& q, const ScalarFunction& f,
                                  const Measure& nu);

/// Level convolution (f_next ∗ f)(x) = Σ_{y∈G_{i+1}} f_next(y) f(y⁻¹x) μ_next(y).
/// f lives on G_i, f_next and μ_next on G_{i+1} ⊆ G_i; μ_next must be declared
/// a probability measure.
ScalarFunction level_convolve(const ScalarFunction& f_next, const ScalarFunction& f,
                              const Measure& mu_next);

/// ‖f‖_L = max_g |f(g)| N_μ(g).
UltraNorm norm_L(const ScalarFunction& f, const Measure& mu, std::uint64_t q);

/// ‖f‖_{L_H} = max_{h∈H} ‖f_h‖_L with f_h(g) = f(h⁻¹g).
UltraNorm norm_LH(const ScalarFunction& f, const Measure& mu, const Subgroup& h, std::uint64_t q);

/// The three norms attached to a function on level i of a chain.
struct LevelNorms {
  UltraNorm square_part;  // ‖f²‖_L^{1/2} = max_x |f(x)| N_{μ^i}(x)^{1/2}
  UltraNorm primed;       // ‖f‖'_i
  UltraNorm level;        // ‖f‖_i = max of the two

  friend bool operator==(const LevelNorms&, const LevelNorms&) = default;
};

/// Norms of f on G_i = μ_i's domain, with G_{i+1} = μ_next's domain:
///   ‖f‖'_i = [max_{x∈G_i, y∈G_{i+1}} |f(y⁻¹x)|² N_{μ^i}(x) max(1, N_{μ^{i+1}}(y))]^{1/2}.
LevelNorms norm_Hi(const ScalarFunction& f, const Measure& mu_i, const Measure& mu_next,
                   std::uint64_t q);

/// Top-level variant: the chain ends at G_i, and G_{i+1} is taken to be {e}
/// carrying the unit point mass.
LevelNorms norm_Hi(const ScalarFunction& f, const Measure& mu_i, std::uint64_t q);

/// ψ_i = Ch_{U_i} / ν(U_i), U_i the i-th chain level, ν on the chain's level 0.
/// Throws PreconditionError when ν(U_i) = 0.
ScalarFunction approximate_unit(const SubgroupChain& chain, const Measure& nu, std::size_t i);

/// ζ(x) = μ(A ∩ xB) for every x in μ's domain.
ScalarFunction zeta(std::span<const Element> a, std::span<const Element> b, const Measure& mu);

/// The product set AB = {ab : a ∈ A, b ∈ B}, sorted.
std::vector<Element> product_set(const FiniteGroup& g, std::span<const Element> a,
                                 std::span<const Element> b);

/// {x : ‖A ∩ xB⁻¹‖_μ > 0}, sorted. Always a subset of AB.
std::vector<Element> positive_intersection_set(std::span<const Element> a,
                                               std::span<const Element> b, const Measure& mu,
                                               std::uint64_t q);

}  // namespace ultrameasure

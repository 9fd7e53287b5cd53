#include "ultrameasure/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <set>

#include "ultrameasure/convolve.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/json_io.hpp"
#include "ultrameasure/measure.hpp"
#include "ultrameasure/random.hpp"
#include "ultrameasure/rep.hpp"
#include "ultrameasure/tower.hpp"

namespace ultrameasure {

namespace {

using nlohmann::json;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng trial_rng(std::uint64_t seed, std::uint64_t family, std::size_t trial) {
  return Rng(splitmix(splitmix(seed ^ splitmix(family)) + trial));
}

class Recorder {
 public:
  void check(const std::string& name, bool ok, const std::function<json()>& witness) {
    auto& p = entry(name);
    ++p.checks;
    if (!ok && p.status != PropertyStatus::fail) {
      p.status = PropertyStatus::fail;
      p.witness = witness();
    }
  }

  /// Pinned fixture: keeps the first witness, or the first failing one.
  void pin(const std::string& name, bool ok, json witness) {
    auto& p = entry(name);
    ++p.checks;
    if (p.status == PropertyStatus::fail) return;
    if (!ok) {
      p.status = PropertyStatus::fail;
      p.witness = std::move(witness);
    } else if (p.witness.is_null()) {
      p.witness = std::move(witness);
    }
  }

  void skip(const std::string& name) {
    auto& p = entry(name);
    if (p.checks == 0) p.status = PropertyStatus::skipped;
  }

  void touch(const FiniteGroup& g) { instances_.insert(g.name()); }

  std::vector<PropertyResult> results() const {
    std::vector<PropertyResult> out;
    for (const auto& [name, p] : props_) {
      auto copy = p;
      if (copy.status == PropertyStatus::skipped && copy.checks > 0) copy.status = PropertyStatus::pass;
      out.push_back(std::move(copy));
    }
    return out;
  }

  std::vector<std::string> instances() const { return {instances_.begin(), instances_.end()}; }

 private:
  PropertyResult& entry(const std::string& name) {
    auto [it, inserted] = props_.try_emplace(name);
    if (inserted) it->second.name = name;
    return it->second;
  }

  std::map<std::string, PropertyResult> props_;
  std::set<std::string> instances_;
};

struct Groups {
  GroupPtr z3 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3, 1));
  GroupPtr z9 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3, 2));
  GroupPtr z27 = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(3, 3));
  GroupPtr heis = std::make_shared<const FiniteGroup>(FiniteGroup::heisenberg(3, 1));
};

json norm_pair(const UltraNorm& lhs, const UltraNorm& rhs) {
  return {{"lhs", lhs.str()}, {"rhs", rhs.str()}};
}

Rational random_scalar(Rng& rng, std::uint64_t q) { return random_rational(rng, q); }

// Convolution norm bounds ------------------------------------------------------------

void run_lemma2(Recorder& rec, const Groups& groups, std::uint64_t seed, std::size_t trials,
                std::uint64_t q) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 2, t);
    const auto& group = (t % 2 == 0) ? groups.z9 : groups.heis;
    rec.touch(*group);
    auto chain = SubgroupChain::standard(group);
    const auto& whole = chain.level(0);
    const auto& h = chain.level(rng.below(chain.length()));

    auto nu = random_measure(rng, h, q);
    auto mu = random_measure(rng, whole, q);
    auto conv = convolve_measures(nu, mu);
    auto lhs = measure_norm(conv, q);
    auto rhs = measure_norm(nu, q) * measure_norm(mu, q);
    rec.check("lemma2.measure_bound", lhs <= rhs, [&] {
      auto w = norm_pair(lhs, rhs);
      w["trial"] = t;
      w["nu"] = io::to_json(nu);
      w["mu"] = io::to_json(mu);
      return w;
    });

    auto qf = random_function(rng, h, q);
    auto f = random_function(rng, whole, q);
    auto fconv = convolve_functions(qf, f, nu);
    auto flhs = norm_LH(fconv, mu, h, q);
    auto frhs = norm_L(qf, nu, q) * norm_LH(f, mu, h, q);
    rec.check("lemma2.function_bound", flhs <= frhs, [&] {
      auto w = norm_pair(flhs, frhs);
      w["trial"] = t;
      w["q"] = io::to_json(qf);
      w["f"] = io::to_json(f);
      return w;
    });

    // Bilinearity of both convolutions in each argument.
    auto c = random_scalar(rng, q);
    auto d = random_scalar(rng, q);
    auto nu2 = random_measure(rng, h, q);
    auto mu2 = random_measure(rng, whole, q);
    bool linear = convolve_measures(combine(c, nu, d, nu2), mu) ==
                      combine(c, conv, d, convolve_measures(nu2, mu)) &&
                  convolve_measures(nu, combine(c, mu, d, mu2)) ==
                      combine(c, conv, d, convolve_measures(nu, mu2));
    auto qf2 = random_function(rng, h, q);
    auto f2 = random_function(rng, whole, q);
    linear = linear &&
             convolve_functions(c * qf + d * qf2, f, nu) ==
                 c * fconv + d * convolve_functions(qf2, f, nu) &&
             convolve_functions(qf, c * f + d * f2, nu) ==
                 c * fconv + d * convolve_functions(qf, f2, nu);
    rec.check("lemma2.bilinearity", linear, [&] { return json{{"trial", t}}; });

    // Translation by H preserves the L_H norm.
    auto base = norm_LH(f, mu, h, q);
    bool preserved = true;
    for (auto s : h.elements()) preserved = preserved && norm_LH(f.left_translate(s), mu, h, q) == base;
    rec.check("lemma2.translation_norm", preserved, [&] { return json{{"trial", t}}; });

    // The averaged bound is stated for probability measures.
    auto nu_p = random_probability_measure(rng, h, q);
    auto mu_p = random_probability_measure(rng, whole, q);
    auto lhs6 = norm_LH(convolve_functions(qf, f, nu_p), mu_p, h, q);
    auto rhs6 = norm_LH(f, mu_p, h, q) * norm_L(qf, nu_p, q);
    rec.check("lemma2.averaged_bound", lhs6 <= rhs6, [&] {
      auto w = norm_pair(lhs6, rhs6);
      w["trial"] = t;
      return w;
    });
  }
}

// Cocycle ----------------------------------------------------------------------------

void run_cocycle(Recorder& rec, const Groups& groups, std::uint64_t seed, std::size_t trials,
                 std::uint64_t q) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 10, t);
    const auto& group = (t % 2 == 0) ? groups.z9 : groups.heis;
    rec.touch(*group);
    const auto& g = *group;
    auto whole = Subgroup::whole(group);
    auto mu = (t % 4 < 2) ? random_probability_measure(rng, whole, q) : random_measure(rng, whole, q);

    std::vector<ScalarFunction> rho;
    for (auto phi : g.elements()) rho.push_back(radon_nikodym(mu, phi));

    bool cocycle = true;
    json witness;
    for (auto phi : g.elements()) {
      const auto phi_inv = g.inverse(phi);
      for (auto psi : g.elements()) {
        const auto& rho_prod = rho[g.mul(phi, psi).index];
        const auto& rho_psi = rho[psi.index];
        const auto& rho_phi = rho[phi.index];
        for (auto x : g.elements()) {
          if (rho_prod(x) != rho_psi(g.mul(phi_inv, x)) * rho_phi(x)) {
            cocycle = false;
            witness = {{"trial", t}, {"phi", phi.index}, {"psi", psi.index}, {"g", x.index}};
            break;
          }
        }
        if (!cocycle) break;
      }
      if (!cocycle) break;
    }
    rec.check("cocycle.identity", cocycle, [&] { return witness; });

    bool integral = true;
    for (auto phi : g.elements()) integral = integral && integrate(rho[phi.index], mu) == mu.total_mass();
    rec.check("cocycle.rho_integral", integral, [&] { return json{{"trial", t}}; });

    bool roundtrip = true;
    for (auto phi : g.elements()) {
      const auto back = g.inverse(phi);
      roundtrip = roundtrip && translate(translate(mu, phi, Side::left), back, Side::left) == mu &&
                  translate(translate(mu, phi, Side::right), back, Side::right) == mu;
    }
    rec.check("cocycle.translate_roundtrip", roundtrip, [&] { return json{{"trial", t}}; });

    if (mu.declared_probability()) {
      bool bounded = true;
      for (auto x : g.elements()) bounded = bounded && pointwise_norm(mu, x, q) <= UltraNorm::one(q);
      rec.check("cocycle.probability_norm_bound", bounded, [&] { return json{{"trial", t}}; });
    }
  }
}

// Approximate units ------------------------------------------------------------------

void run_prop5(Recorder& rec, const Groups& groups, std::uint64_t seed, std::size_t trials,
               std::uint64_t q) {
  auto chain = SubgroupChain::standard(groups.z27);
  const auto& g = *groups.z27;
  rec.touch(g);
  const auto& whole = chain.level(0);
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 4, t);
    auto nu = (t == 0) ? Measure::haar(whole) : random_probability_measure(rng, whole, q);

    bool unit = true;
    bool shrinking = true;
    std::vector<std::optional<ScalarFunction>> psi(chain.length());
    for (std::size_t i = 0; i < chain.length(); ++i) {
      if (nu.mass(chain.level(i).elements()).is_zero()) continue;
      psi[i] = approximate_unit(chain, nu, i);
      unit = unit && integrate(*psi[i], nu) == Rational(1);
      for (auto x : g.elements()) {
        shrinking = shrinking && ((*psi[i])(x).is_zero() != chain.level(i).contains(x));
      }
    }
    rec.check("prop5.unit_integral", unit, [&] { return json{{"trial", t}}; });
    rec.check("prop5.support_is_level", shrinking, [&] { return json{{"trial", t}}; });

    // f constant on the orbits U_k x: f(hx) = f(x) for h in U_k.
    const std::size_t k = rng.below(chain.length());
    const auto& level = chain.level(k);
    ScalarFunction f(whole);
    std::vector<bool> assigned(g.order(), false);
    for (auto x : g.elements()) {
      if (assigned[x.index]) continue;
      auto v = random_rational(rng, q);
      for (auto h : level.elements()) {
        auto hx = g.mul(h, x);
        f.set(hx, v);
        assigned[hx.index] = true;
      }
    }
    bool fixed = true;
    json witness;
    for (std::size_t i = k; i < chain.length(); ++i) {
      if (!psi[i]) continue;
      if (!(convolve_functions(*psi[i], f, nu) == f)) {
        fixed = false;
        witness = {{"trial", t}, {"level", i}, {"constancy_level", k}, {"f", io::to_json(f)}};
        break;
      }
    }
    rec.check("prop5.coset_constant_fixed", fixed, [&] { return witness; });
  }
}

/// Fixed-seed searches whose results serve as regression fixtures.
void pin_tower_witnesses(Recorder& rec, const Groups& groups, std::uint64_t q) {
  auto measured = std::make_shared<const MeasuredChain>(MeasuredChain::haar(SubgroupChain::standard(groups.heis)));
  Rng rng(0x5eed);
  bool found_comm = false, found_assoc = false;
  json comm, assoc;
  for (int sample = 0; sample < 100 && !(found_comm && found_assoc); ++sample) {
    auto f = random_tower(rng, measured, q);
    auto g = random_tower(rng, measured, q);
    auto h = random_tower(rng, measured, q);
    if (!found_comm && !commutativity_defect(f, g).is_zero()) {
      found_comm = true;
      comm = {{"sample", sample}, {"f", io::to_json(f)}, {"g", io::to_json(g)}};
    }
    if (!found_assoc && !associativity_defect(f, g, h).is_zero()) {
      found_assoc = true;
      assoc = {{"sample", sample}, {"defect", io::to_json(associativity_defect(f, g, h))}};
    }
  }
  rec.pin("lemma16.noncommutative_witness", found_comm, comm);
  rec.pin("lemma16.nonassociative_witness", found_assoc, assoc);
}

void check_idempotents(Recorder& rec, const MeasuredChainPtr& measured, std::size_t t, Rng& rng) {
  const auto m = measured->length();
  auto ones = TowerElement::level_indicators(measured);
  auto product = star(ones, ones);
  bool indicator = true;
  for (std::size_t i = 0; i + 1 < m; ++i) indicator = indicator && product.component(i) == ones.component(i);
  rec.check("lemma16.indicator_identity", indicator, [&] { return json{{"trial", t}}; });

  // Inner chain U_j ⊆ G_j with U_{j+1} ⊆ U_j: level j + shift, capped at the top level.
  const std::size_t shift = rng.below(m);
  std::vector<Subgroup> inner;
  for (std::size_t j = 0; j < m; ++j) inner.push_back(measured->level(std::min(j + shift, m - 1)));
  try {
    auto e = idempotent_tower(measured, inner);
    auto ee = star(e, e);
    bool idempotent = true;
    for (std::size_t i = 0; i + 1 < m; ++i) idempotent = idempotent && ee.component(i) == e.component(i);
    rec.check("lemma16.idempotent", idempotent, [&] { return json{{"trial", t}, {"shift", shift}}; });
  } catch (const PreconditionError&) {
    rec.skip("lemma16.idempotent");
  }
}

// Level convolution and the tower algebra ------------------------------------------

void run_lemma16(Recorder& rec, const Groups& groups, std::uint64_t seed, std::size_t trials,
                 std::uint64_t q) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 16, t);
    const auto& group = (t % 2 == 0) ? groups.z27 : groups.heis;
    rec.touch(*group);
    auto measured = std::make_shared<const MeasuredChain>(
        random_measured_chain(rng, SubgroupChain::standard(group), q));
    const auto m = measured->length();
    const std::size_t i = rng.below(m - 1);

    auto f_next = random_function(rng, measured->level(i + 1), q);
    auto f = random_function(rng, measured->level(i), q);
    const auto& mu_i = measured->measure(i);
    const auto& mu_next = measured->measure(i + 1);
    auto conv = level_convolve(f_next, f, mu_next);

    auto at_level = [&](const ScalarFunction& fn, std::size_t level) {
      return level + 1 < m ? norm_Hi(fn, measured->measure(level), measured->measure(level + 1), q)
                           : norm_Hi(fn, measured->measure(level), q);
    };
    auto conv_norms = norm_Hi(conv, mu_i, mu_next, q);
    auto next_norms = at_level(f_next, i + 1);
    auto f_norms = norm_Hi(f, mu_i, mu_next, q);

    auto bound = next_norms.level * f_norms.level;
    rec.check("lemma16.bound", conv_norms.level <= bound, [&] {
      auto w = norm_pair(conv_norms.level, bound);
      w["trial"] = t;
      w["level"] = i;
      return w;
    });
    auto intermediate = next_norms.square_part * f_norms.primed;
    rec.check("lemma16.square_part_bound", conv_norms.square_part <= intermediate, [&] {
      auto w = norm_pair(conv_norms.square_part, intermediate);
      w["trial"] = t;
      return w;
    });
    rec.check("lemma16.primed_bound", conv_norms.primed <= intermediate, [&] {
      auto w = norm_pair(conv_norms.primed, intermediate);
      w["trial"] = t;
      return w;
    });

    auto c = random_scalar(rng, q);
    auto d = random_scalar(rng, q);
    auto f_next2 = random_function(rng, measured->level(i + 1), q);
    auto f2 = random_function(rng, measured->level(i), q);
    bool linear = level_convolve(c * f_next + d * f_next2, f, mu_next) ==
                      c * conv + d * level_convolve(f_next2, f, mu_next) &&
                  level_convolve(f_next, c * f + d * f2, mu_next) ==
                      c * conv + d * level_convolve(f_next, f2, mu_next);
    rec.check("lemma16.bilinearity", linear, [&] { return json{{"trial", t}}; });

    auto a = random_tower(rng, measured, q);
    auto b = random_tower(rng, measured, q);
    auto lhs = algebra_norm(star(a, b), q);
    auto rhs = algebra_norm(a, q) * algebra_norm(b, q);
    rec.check("lemma16.submultiplicative", lhs <= rhs, [&] {
      auto w = norm_pair(lhs, rhs);
      w["trial"] = t;
      return w;
    });
    rec.check("lemma16.involutive", involution(involution(a)) == a && involution(a + b) == involution(a) + involution(b) &&
                                        involution(c * a) == c * involution(a),
              [&] { return json{{"trial", t}}; });
    auto b2 = random_tower(rng, measured, q);
    rec.check("lemma16.star_bilinear",
              star(c * b + d * b2, a) == c * star(b, a) + d * star(b2, a) &&
                  star(a, c * b + d * b2) == c * star(a, b) + d * star(a, b2),
              [&] { return json{{"trial", t}}; });
    check_idempotents(rec, measured, t, rng);
  }
  pin_tower_witnesses(rec, groups, q);
}

// Restriction identity ---------------------------------------------------------------

/// Random tower with f^j restricted to G_{j+1} equal to f^{j+1} on every level.
TowerElement restriction_compatible_tower(Rng& rng, const MeasuredChainPtr& chain, std::uint64_t q) {
  const auto m = chain->length();
  std::vector<ScalarFunction> components(m, ScalarFunction::zero(chain->level(0)));
  components[m - 1] = random_function(rng, chain->level(m - 1), q);
  for (std::size_t j = m - 1; j-- > 0;) {
    auto f = random_function(rng, chain->level(j), q);
    for (auto y : chain->level(j + 1).elements()) f.set(y, components[j + 1](y));
    components[j] = std::move(f);
  }
  return TowerElement(chain, std::move(components));
}

void run_note19(Recorder& rec, const Groups& groups, std::uint64_t seed, std::size_t trials,
                std::uint64_t q) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 19, t);
    const GroupPtr& group = (t % 3 == 0) ? groups.z9 : (t % 3 == 1) ? groups.z27 : groups.heis;
    rec.touch(*group);
    auto chain = SubgroupChain::standard(group);
    MeasuredChainPtr measured;
    if (t % 2 == 0) {
      measured = std::make_shared<const MeasuredChain>(MeasuredChain::haar(chain));
    } else {
      std::vector<Measure> measures;
      for (const auto& level : chain.levels()) {
        measures.push_back(random_symmetric_probability_measure(rng, level, q));
      }
      measured = std::make_shared<const MeasuredChain>(chain, std::move(measures));
    }
    auto f = restriction_compatible_tower(rng, measured, q);
    const std::size_t j = rng.below(measured->length() - 1);
    auto [lhs, rhs] = note19_identity(f, j);
    rec.check("note19.identity", lhs == rhs, [&, lhs = lhs, rhs = rhs] {
      return json{{"trial", t}, {"level", j}, {"lhs", lhs.str()}, {"rhs", rhs.str()}};
    });

    const auto& upper = f.component(j + 1);
    auto level_norms = (j + 2 < measured->length())
                           ? norm_Hi(upper, measured->measure(j + 1), measured->measure(j + 2), q)
                           : norm_Hi(upper, measured->measure(j + 1), q);
    auto lhs_norm = abs_q(lhs, q);
    rec.check("note19.norm_bound", lhs_norm <= level_norms.level, [&] {
      auto w = norm_pair(lhs_norm, level_norms.level);
      w["trial"] = t;
      w["level"] = j;
      w["value"] = lhs.str();
      w["f_upper"] = io::to_json(upper);
      w["measure_upper"] = io::to_json(measured->measure(j + 1));
      return w;
    });
    auto squared = level_norms.square_part * level_norms.square_part;
    rec.check("note19.square_norm_bound", lhs_norm <= squared, [&] {
      auto w = norm_pair(lhs_norm, squared);
      w["trial"] = t;
      return w;
    });
  }
}

// Ideals of the scalar model --------------------------------------------------------------

std::vector<ScalarSequence> ideal_grid() {
  const Rational values[] = {Rational(0), Rational(1), Rational(5), Rational(1, 5)};
  std::vector<ScalarSequence> out;
  for (int code = 0; code < 1024; ++code) {
    std::vector<Rational> entries(5);
    int c = code;
    for (auto& e : entries) {
      e = values[c % 4];
      c /= 4;
    }
    out.emplace_back(std::move(entries));
  }
  return out;
}

ScalarSequence unit_vector(std::size_t i) {
  std::vector<Rational> entries(i + 1);
  entries[i] = Rational(1);
  return ScalarSequence(std::move(entries));
}

ScalarSequence ones(std::size_t n, std::size_t first = 0) {
  std::vector<Rational> entries(n);
  for (std::size_t i = first; i < n; ++i) entries[i] = Rational(1);
  return ScalarSequence(std::move(entries));
}

void run_ideals(Recorder& rec, std::uint64_t seed, std::size_t trials, std::uint64_t q) {
  const auto grid = ideal_grid();
  constexpr std::int64_t kMaxIndex = 4;

  bool k_left = true, k_right = true, j_left = true, j_right = true, j_top_empty = true;
  json k_left_w, k_right_w, j_left_w, j_right_w;
  for (const auto& alpha : grid) {
    for (const auto& x : grid) {
      auto ax = c0_star(alpha, x);
      auto xa = c0_star(x, alpha);
      for (std::int64_t i = 0; i <= kMaxIndex; ++i) {
        if (ideal_member(x, IdealKind::K, i)) {
          if (k_left && !ideal_member(ax, IdealKind::K, i)) {
            k_left = false;
            k_left_w = {{"alpha", io::to_json(alpha)}, {"x", io::to_json(x)}, {"i", i}};
          }
          if (k_right && !ideal_member(xa, IdealKind::K, i - 1)) {
            k_right = false;
            k_right_w = {{"alpha", io::to_json(alpha)}, {"x", io::to_json(x)}, {"i", i}};
          }
        }
        if (ideal_member(x, IdealKind::J, i)) {
          if (j_left && !ideal_member(ax, IdealKind::J, i)) {
            j_left = false;
            j_left_w = {{"alpha", io::to_json(alpha)}, {"x", io::to_json(x)}, {"i", i}};
          }
          if (j_right && !ideal_member(xa, IdealKind::J, i)) {
            j_right = false;
            j_right_w = {{"alpha", io::to_json(alpha)}, {"x", io::to_json(x)}, {"i", i}};
          }
          // The i-th entry of x⋆α is x^{i+1}α^i = 0, so unit_vector(i) is never reached.
          if (!xa[static_cast<std::size_t>(i)].is_zero()) j_top_empty = false;
        }
      }
    }
  }
  rec.check("ideals.K_left_absorbs", k_left, [&] { return k_left_w; });
  rec.check("ideals.K_right_shifts", k_right, [&] { return k_right_w; });
  rec.check("ideals.J_left_absorbs", j_left, [&] { return j_left_w; });
  rec.check("ideals.J_right_absorbs", j_right, [&] { return j_right_w; });

  // Pinned witnesses.
  for (std::int64_t i = 0; i + 1 <= kMaxIndex; ++i) {
    auto x = unit_vector(static_cast<std::size_t>(i + 1));
    auto alpha = ones(5);
    auto xa = c0_star(x, alpha);
    rec.pin("ideals.K_right_strict_witness",
            ideal_member(x, IdealKind::K, i) && !ideal_member(xa, IdealKind::K, i),
            {{"x", io::to_json(x)}, {"alpha", io::to_json(alpha)}, {"product", io::to_json(xa)}, {"i", i}});
  }
  {
    const std::int64_t i = 2;
    auto y = unit_vector(static_cast<std::size_t>(i));
    rec.pin("ideals.J_right_strict_witness", ideal_member(y, IdealKind::J, i) && j_top_empty,
            {{"unreached", io::to_json(y)}, {"i", i},
             {"reason", "(x*alpha)^i = x^(i+1) alpha^i = 0 for every x in J_i"}});
  }
  // c0⋆J_i = J_i and c0⋆K_i = K_i: α = (0,1,1,...) acts as a left unit.
  bool left_unit = true;
  const auto shift_unit = ones(6, 1);
  for (const auto& x : grid) left_unit = left_unit && c0_star(shift_unit, x) == x;
  rec.pin("ideals.left_unit_surjective", left_unit, {{"alpha", io::to_json(shift_unit)}});

  {
    ScalarSequence alpha({Rational(1), Rational(1), Rational(2)});
    ScalarSequence beta({Rational(1), Rational(1), Rational(1)});
    auto left = c0_star(c0_star(alpha, beta), beta);
    auto right = c0_star(alpha, c0_star(beta, beta));
    rec.pin("c0.nonassociative_witness", left[0] == Rational(2) && right[0] == Rational(1),
            {{"alpha", io::to_json(alpha)}, {"beta", io::to_json(beta)}, {"gamma", io::to_json(beta)},
             {"left_grouping", io::to_json(left)}, {"right_grouping", io::to_json(right)}});
  }

  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 21, t);
    auto draw = [&](std::size_t n) {
      std::vector<Rational> entries(n);
      for (auto& e : entries) e = rng.chance(1, 5) ? Rational(0) : random_rational(rng, q);
      return ScalarSequence(std::move(entries));
    };
    auto a = draw(6), b = draw(6), b2 = draw(6);
    auto c = random_scalar(rng, q), d = random_scalar(rng, q);
    auto combo = [&](const ScalarSequence& u, const ScalarSequence& v) {
      std::vector<Rational> entries(std::max(u.size(), v.size()));
      for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = c * u[i] + d * v[i];
      return ScalarSequence(std::move(entries));
    };
    rec.check("c0.bilinearity",
              c0_star(a, combo(b, b2)) == combo(c0_star(a, b), c0_star(a, b2)) &&
                  c0_star(combo(b, b2), a) == combo(c0_star(b, a), c0_star(b2, a)),
              [&] { return json{{"trial", t}}; });

    // Changing α at index n > N leaves (α⋆β)^i unchanged for i < N-1.
    const std::size_t n_cut = 1 + rng.below(5);
    auto changed = a.entries();
    changed.resize(8);
    const std::size_t at = n_cut + 1 + rng.below(7 - n_cut);
    changed[at] = changed[at] + Rational(1);
    auto before = c0_star(a, b);
    auto after = c0_star(ScalarSequence(changed), b);
    bool stable = true;
    for (std::size_t i = 0; i + 1 < n_cut; ++i) stable = stable && before[i] == after[i];
    rec.check("c0.quotient_compatibility", stable, [&] { return json{{"trial", t}}; });
  }
}

// Weighted regular representation ------------------------------------------------

void run_isometry(Recorder& rec, const Groups& groups, std::uint64_t seed, std::size_t trials,
                  std::uint64_t q) {
  for (std::size_t t = 0; t < trials; ++t) {
    auto rng = trial_rng(seed, 14, t);
    const GroupPtr& group = (t % 3 == 0) ? groups.z3 : (t % 3 == 1) ? groups.z9 : groups.heis;
    rec.touch(*group);
    const auto& g = *group;
    auto whole = Subgroup::whole(group);
    auto mu = (t % 2 == 0) ? random_probability_measure(rng, whole, q) : random_measure(rng, whole, q);
    auto family = weighted_family(mu);

    bool isometric = true;
    json witness;
    for (auto h : g.elements()) {
      auto result = isometry_check(family[h.index], mu, q, rng.next(), 4);
      if (!result.isometric) {
        isometric = false;
        witness = {{"trial", t}, {"h", h.index}, {"f", io::to_json(*result.counterexample)}};
        break;
      }
    }
    rec.check("isometry.exact", isometric, [&] { return witness; });

    rec.check("isometry.identity", family[g.identity().index] == Operator::identity(g.order()),
              [&] { return json{{"trial", t}}; });

    bool hom = true;
    for (int s = 0; s < 8 && hom; ++s) {
      Element a{static_cast<std::uint32_t>(rng.below(g.order()))};
      Element b{static_cast<std::uint32_t>(rng.below(g.order()))};
      hom = family[g.mul(a, b).index] == family[a.index] * family[b.index];
    }
    rec.check("isometry.homomorphism", hom, [&] { return json{{"trial", t}}; });

    auto a = random_function(rng, whole, q);
    auto base = averaged_operator(a, family, mu, g.identity(), Rational(0));
    bool intertwines = true;
    for (int s = 0; s < 4 && intertwines; ++s) {
      Element h{static_cast<std::uint32_t>(rng.below(g.order()))};
      intertwines = averaged_operator(a, family, mu, h, Rational(0)) == family[h.index] * base;
    }
    rec.check("isometry.intertwining", intertwines, [&] { return json{{"trial", t}}; });
  }
}

const char* status_name(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::pass:
      return "pass";
    case PropertyStatus::fail:
      return "fail";
    case PropertyStatus::skipped:
      break;
  }
  return "skipped";
}

}  // namespace

std::optional<Suite> parse_suite(std::string_view name) {
  static const std::pair<std::string_view, Suite> table[] = {
      {"all", Suite::all},         {"lemma2", Suite::lemma2}, {"cocycle", Suite::cocycle},
      {"prop5", Suite::prop5},     {"lemma16", Suite::lemma16}, {"note19", Suite::note19},
      {"ideals", Suite::ideals},   {"isometry", Suite::isometry}};
  for (const auto& [key, suite] : table) {
    if (key == name) return suite;
  }
  return std::nullopt;
}

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::all: return "all";
    case Suite::lemma2: return "lemma2";
    case Suite::cocycle: return "cocycle";
    case Suite::prop5: return "prop5";
    case Suite::lemma16: return "lemma16";
    case Suite::note19: return "note19";
    case Suite::ideals: return "ideals";
    case Suite::isometry: return "isometry";
  }
  return "all";
}

bool RunReport::passed() const {
  return std::none_of(properties.begin(), properties.end(),
                      [](const PropertyResult& p) { return p.status == PropertyStatus::fail; });
}

std::vector<std::string> RunReport::failures() const {
  std::vector<std::string> out;
  for (const auto& p : properties) {
    if (p.status == PropertyStatus::fail) out.push_back(p.name);
  }
  return out;
}

nlohmann::json RunReport::to_json() const {
  json props = json::array();
  for (const auto& p : properties) {
    json entry = {{"name", p.name}, {"status", status_name(p.status)}, {"checks", p.checks}};
    if (!p.witness.is_null()) entry["witness"] = p.witness;
    props.push_back(std::move(entry));
  }
  return {{"command", command},  {"suite", suite_name(suite)}, {"seed", seed},
          {"trials", trials},    {"q", q},                     {"instances", instances},
          {"properties", props}, {"passed", passed()}};
}

RunReport run_verify(Suite suite, std::uint64_t seed, std::size_t trials, std::uint64_t q) {
  RunReport report;
  report.suite = suite;
  report.seed = seed;
  report.trials = trials;
  report.q = q;
  report.command = "verify " + suite_name(suite) + " --seed " + std::to_string(seed) +
                   " --trials " + std::to_string(trials);
  if (trials == 0) return report;

  Groups groups;
  Recorder rec;
  auto wants = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (wants(Suite::lemma2)) run_lemma2(rec, groups, seed, trials, q);
  if (wants(Suite::cocycle)) run_cocycle(rec, groups, seed, trials, q);
  if (wants(Suite::prop5)) run_prop5(rec, groups, seed, trials, q);
  if (wants(Suite::lemma16)) run_lemma16(rec, groups, seed, trials, q);
  if (wants(Suite::note19)) run_note19(rec, groups, seed, trials, q);
  if (wants(Suite::ideals)) run_ideals(rec, seed, trials, q);
  if (wants(Suite::isometry)) run_isometry(rec, groups, seed, trials, q);
  report.instances = rec.instances();
  report.properties = rec.results();
  return report;
}

}  // namespace ultrameasure

#include "ultrameasure/tower.hpp"

#include <algorithm>

#include "ultrameasure/errors.hpp"

namespace ultrameasure {

namespace {

void require_same_chain(const TowerElement& a, const TowerElement& b, const char* what) {
  if (a.chain_ptr() != b.chain_ptr() && !(a.chain() == b.chain())) {
    throw InputError(std::string(what) + ": tower elements live on different chains");
  }
}

}  // namespace

// MeasuredChain ----------------------------------------------------------------

MeasuredChain::MeasuredChain(SubgroupChain chain, std::vector<Measure> measures)
    : chain_(std::move(chain)), measures_(std::move(measures)) {
  if (measures_.size() != chain_.length()) {
    throw ValidationError("measured chain has " + std::to_string(chain_.length()) + " levels but " +
                          std::to_string(measures_.size()) + " measures");
  }
  for (std::size_t i = 0; i < measures_.size(); ++i) {
    if (!(measures_[i].domain() == chain_.level(i))) {
      throw ValidationError("measure " + std::to_string(i) + " does not live on chain level " +
                            std::to_string(i));
    }
    if (!measures_[i].declared_probability()) {
      throw ValidationError("measure " + std::to_string(i) + " is not a probability measure");
    }
  }
}

MeasuredChain MeasuredChain::haar(SubgroupChain chain) {
  std::vector<Measure> measures;
  for (const auto& level : chain.levels()) measures.push_back(Measure::haar(level));
  return MeasuredChain(std::move(chain), std::move(measures));
}

// TowerElement -------------------------------------------------------------------

TowerElement::TowerElement(MeasuredChainPtr chain, std::vector<ScalarFunction> components)
    : chain_(std::move(chain)), components_(std::move(components)) {
  if (!chain_) throw InputError("tower element without a chain");
  if (components_.size() != chain_->length()) {
    throw InputError("tower element has " + std::to_string(components_.size()) +
                     " components for a chain of " + std::to_string(chain_->length()) + " levels");
  }
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (!(components_[i].domain() == chain_->level(i))) {
      throw InputError("tower component " + std::to_string(i) + " does not live on level " +
                       std::to_string(i));
    }
  }
}

TowerElement TowerElement::zero(MeasuredChainPtr chain) {
  std::vector<ScalarFunction> components;
  for (const auto& level : chain->chain().levels()) components.push_back(ScalarFunction::zero(level));
  return TowerElement(std::move(chain), std::move(components));
}

TowerElement TowerElement::level_indicators(MeasuredChainPtr chain) {
  std::vector<ScalarFunction> components;
  for (const auto& level : chain->chain().levels()) {
    components.push_back(ScalarFunction::constant(level, Rational(1)));
  }
  return TowerElement(std::move(chain), std::move(components));
}

bool TowerElement::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const ScalarFunction& f) { return f.is_zero(); });
}

TowerElement& TowerElement::operator+=(const TowerElement& rhs) {
  require_same_chain(*this, rhs, "tower sum");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& rhs) {
  require_same_chain(*this, rhs, "tower difference");
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

TowerElement& TowerElement::operator*=(const Rational& c) {
  for (auto& f : components_) f *= c;
  return *this;
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  return (a.chain_ == b.chain_ || *a.chain_ == *b.chain_) && a.components_ == b.components_;
}

// Algebra ----------------------------------------------------------------------

TowerElement star(const TowerElement& f, const TowerElement& g) {
  require_same_chain(f, g, "star");
  const auto& chain = f.chain();
  std::vector<ScalarFunction> out;
  out.reserve(chain.length());
  for (std::size_t i = 0; i + 1 < chain.length(); ++i) {
    out.push_back(level_convolve(f.component(i + 1), g.component(i), chain.measure(i + 1)));
  }
  out.push_back(ScalarFunction::zero(chain.level(chain.length() - 1)));
  return TowerElement(f.chain_ptr(), std::move(out));
}

TowerElement involution(const TowerElement& f) {
  std::vector<ScalarFunction> out;
  out.reserve(f.length());
  for (const auto& component : f.components()) out.push_back(component.inverted());
  return TowerElement(f.chain_ptr(), std::move(out));
}

std::vector<LevelNorms> tower_level_norms(const TowerElement& f, std::uint64_t q) {
  const auto& chain = f.chain();
  std::vector<LevelNorms> out;
  for (std::size_t i = 0; i < chain.length(); ++i) {
    if (i + 1 < chain.length()) {
      out.push_back(norm_Hi(f.component(i), chain.measure(i), chain.measure(i + 1), q));
    } else {
      out.push_back(norm_Hi(f.component(i), chain.measure(i), q));
    }
  }
  return out;
}

UltraNorm algebra_norm(const TowerElement& f, std::uint64_t q) {
  UltraNorm best;
  for (const auto& n : tower_level_norms(f, q)) best = std::max(best, n.level);
  return best;
}

TowerElement associativity_defect(const TowerElement& f, const TowerElement& g,
                                  const TowerElement& h) {
  return star(star(f, g), h) - star(f, star(g, h));
}

TowerElement commutativity_defect(const TowerElement& f, const TowerElement& g) {
  return star(f, g) - star(g, f);
}

TowerElement idempotent_tower(MeasuredChainPtr chain, const std::vector<Subgroup>& inner) {
  if (inner.size() != chain->length()) {
    throw InputError("idempotent_tower: need one inner subgroup per chain level");
  }
  std::vector<ScalarFunction> components;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    if (!inner[j].is_contained_in(chain->level(j))) {
      throw InputError("idempotent_tower: U_" + std::to_string(j) + " is not inside G_" +
                       std::to_string(j));
    }
    if (j > 0 && !inner[j].is_contained_in(inner[j - 1])) {
      throw InputError("idempotent_tower: U_" + std::to_string(j) + " is not inside U_" +
                       std::to_string(j - 1));
    }
    auto mass = chain->measure(j).mass(inner[j].elements());
    if (mass.is_zero()) {
      throw PreconditionError("idempotent_tower: μ^" + std::to_string(j) + "(U_" +
                              std::to_string(j) + ") = 0");
    }
    components.push_back(mass.inverse() *
                         ScalarFunction::indicator(chain->level(j), inner[j].elements()));
  }
  return TowerElement(std::move(chain), std::move(components));
}

std::pair<Rational, Rational> note19_identity(const TowerElement& f, std::size_t j) {
  const auto& chain = f.chain();
  if (j + 1 >= chain.length()) throw InputError("note19_identity: level j+1 is past the chain");
  const auto& upper = f.component(j + 1);
  if (!(f.component(j).restrict_to(chain.level(j + 1)) == upper)) {
    throw PreconditionError("note19_identity: f^" + std::to_string(j) +
                            " does not restrict to f^" + std::to_string(j + 1) + " on G_" +
                            std::to_string(j + 1));
  }
  const auto& mu = chain.measure(j + 1);
  auto lhs = level_convolve(upper.inverted(), f.component(j), mu)(chain.level(j).group().identity());
  Rational rhs;
  for (auto y : chain.level(j + 1).elements()) rhs += upper(y) * upper(y) * mu.atom(y);
  return {lhs, rhs};
}

// Scalar model -----------------------------------------------------------------

ScalarSequence::ScalarSequence(std::vector<Rational> entries) : entries_(std::move(entries)) {
  while (!entries_.empty() && entries_.back().is_zero()) entries_.pop_back();
}

const Rational& ScalarSequence::operator[](std::size_t i) const {
  static const Rational zero;
  return i < entries_.size() ? entries_[i] : zero;
}

ScalarSequence c0_star(const ScalarSequence& alpha, const ScalarSequence& beta) {
  const std::size_t shifted = alpha.size() > 0 ? alpha.size() - 1 : 0;
  const std::size_t n = std::max(shifted, beta.size());
  std::vector<Rational> gamma(n);
  for (std::size_t i = 0; i < n; ++i) gamma[i] = alpha[i + 1] * beta[i];
  return ScalarSequence(std::move(gamma));
}

bool ideal_member(const ScalarSequence& x, IdealKind kind, std::int64_t i) {
  if (kind == IdealKind::J) {
    if (i < 0) throw InputError("ideal J_i needs i >= 0");
    return x.size() <= static_cast<std::size_t>(i) + 1;
  }
  if (i < -1) throw InputError("ideal K_i needs i >= -1");
  for (std::int64_t j = 0; j <= i; ++j) {
    if (!x[static_cast<std::size_t>(j)].is_zero()) return false;
  }
  return true;
}

}  // namespace ultrameasure

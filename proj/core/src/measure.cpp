#include "ultrameasure/measure.hpp"

#include <algorithm>

#include "ultrameasure/errors.hpp"

namespace ultrameasure {

namespace {

const Rational& zero_value() {
  static const Rational zero;
  return zero;
}

void require_same_domain(const Subgroup& a, const Subgroup& b, const char* what) {
  if (!(a == b)) throw InputError(std::string(what) + ": domain mismatch");
}

std::vector<Rational> dense_from_map(const Subgroup& domain,
                                     const std::map<std::uint32_t, Rational>& values,
                                     const char* what) {
  std::vector<Rational> dense(domain.group().order());
  for (const auto& [index, v] : values) {
    auto x = domain.group().element(index);
    if (!domain.contains(x)) {
      throw InputError(std::string(what) + " value at element " + std::to_string(index) +
                       " outside its domain");
    }
    dense[index] = v;
  }
  return dense;
}

}  // namespace

// ScalarFunction --------------------------------------------------------------

ScalarFunction::ScalarFunction(Subgroup domain)
    : domain_(std::move(domain)), values_(domain_.group().order()) {}

ScalarFunction::ScalarFunction(Subgroup domain, const std::map<std::uint32_t, Rational>& values)
    : domain_(std::move(domain)), values_(dense_from_map(domain_, values, "function")) {}

ScalarFunction ScalarFunction::constant(Subgroup domain, const Rational& c) {
  ScalarFunction f(std::move(domain));
  for (auto x : f.domain_.elements()) f.values_[x.index] = c;
  return f;
}

ScalarFunction ScalarFunction::indicator(Subgroup domain, std::span<const Element> set) {
  ScalarFunction f(std::move(domain));
  for (auto x : set) {
    if (f.domain_.contains(x)) f.values_[x.index] = Rational(1);
  }
  return f;
}

const Rational& ScalarFunction::operator()(Element x) const {
  if (!domain_.contains(x)) {
    throw InputError("function evaluated at element " + std::to_string(x.index) +
                     " outside its domain");
  }
  return values_[x.index];
}

const Rational& ScalarFunction::value_or_zero(Element x) const {
  return domain_.contains(x) ? values_[x.index] : zero_value();
}

void ScalarFunction::set(Element x, Rational v) {
  if (!domain_.contains(x)) {
    throw InputError("function assigned at element " + std::to_string(x.index) +
                     " outside its domain");
  }
  values_[x.index] = std::move(v);
}

bool ScalarFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v.is_zero(); });
}

ScalarFunction ScalarFunction::left_translate(Element h) const {
  if (!domain_.contains(h)) throw InputError("translation by an element outside the domain");
  const auto& g = group();
  const auto h_inv = g.inverse(h);
  ScalarFunction out(domain_);
  for (auto x : domain_.elements()) out.values_[x.index] = values_[g.mul(h_inv, x).index];
  return out;
}

ScalarFunction ScalarFunction::inverted() const {
  const auto& g = group();
  ScalarFunction out(domain_);
  for (auto x : domain_.elements()) out.values_[x.index] = values_[g.inverse(x).index];
  return out;
}

ScalarFunction ScalarFunction::restrict_to(const Subgroup& sub) const {
  if (!sub.is_contained_in(domain_)) throw InputError("restriction to a non-subgroup of the domain");
  ScalarFunction out(sub);
  for (auto x : sub.elements()) out.values_[x.index] = values_[x.index];
  return out;
}

ScalarFunction& ScalarFunction::operator+=(const ScalarFunction& rhs) {
  require_same_domain(domain_, rhs.domain_, "function sum");
  for (auto x : domain_.elements()) values_[x.index] += rhs.values_[x.index];
  return *this;
}

ScalarFunction& ScalarFunction::operator-=(const ScalarFunction& rhs) {
  require_same_domain(domain_, rhs.domain_, "function difference");
  for (auto x : domain_.elements()) values_[x.index] -= rhs.values_[x.index];
  return *this;
}

ScalarFunction& ScalarFunction::operator*=(const Rational& c) {
  for (auto x : domain_.elements()) values_[x.index] *= c;
  return *this;
}

bool operator==(const ScalarFunction& a, const ScalarFunction& b) {
  return a.domain_ == b.domain_ && a.values_ == b.values_;
}

// Measure ---------------------------------------------------------------------

Measure::Measure(Subgroup domain, const std::map<std::uint32_t, Rational>& atoms, bool probability)
    : domain_(std::move(domain)),
      atoms_(dense_from_map(domain_, atoms, "measure")),
      probability_(probability) {
  validate();
}

Measure::Measure(Subgroup domain, std::vector<Rational> dense_atoms, bool probability)
    : domain_(std::move(domain)), atoms_(std::move(dense_atoms)), probability_(probability) {
  if (atoms_.size() != domain_.group().order()) {
    throw InputError("measure atom vector has the wrong length");
  }
  for (std::uint32_t i = 0; i < atoms_.size(); ++i) {
    if (!domain_.contains(Element{i}) && !atoms_[i].is_zero()) {
      throw InputError("measure atom at element " + std::to_string(i) + " outside its domain");
    }
  }
  validate();
}

void Measure::validate() {
  if (probability_ && total_mass() != Rational(1)) {
    throw ValidationError("measure flagged as probability has total mass " + total_mass().str());
  }
}

Measure Measure::haar(Subgroup domain) {
  std::vector<Rational> atoms(domain.group().order());
  const Rational w(1, static_cast<std::int64_t>(domain.size()));
  for (auto x : domain.elements()) atoms[x.index] = w;
  return Measure(std::move(domain), std::move(atoms), true);
}

Measure Measure::point_mass(Subgroup domain, Element at) {
  if (!domain.contains(at)) throw InputError("point mass outside the domain");
  std::vector<Rational> atoms(domain.group().order());
  atoms[at.index] = Rational(1);
  return Measure(std::move(domain), std::move(atoms), true);
}

const Rational& Measure::atom(Element x) const {
  if (!domain_.contains(x)) {
    throw InputError("measure atom requested at element " + std::to_string(x.index) +
                     " outside its domain");
  }
  return atoms_[x.index];
}

const Rational& Measure::atom_or_zero(Element x) const {
  return domain_.contains(x) ? atoms_[x.index] : zero_value();
}

Rational Measure::mass(std::span<const Element> set) const {
  Rational total;
  for (auto x : set) total += atom_or_zero(x);
  return total;
}

Rational Measure::total_mass() const { return mass(domain_.elements()); }

bool Measure::is_probability(std::uint64_t q) const {
  if (total_mass() != Rational(1)) return false;
  const auto one = UltraNorm::one(q);
  return std::all_of(domain_.elements().begin(), domain_.elements().end(),
                     [&](Element x) { return abs_q(atoms_[x.index], q) <= one; });
}

bool Measure::has_full_support() const {
  return std::none_of(domain_.elements().begin(), domain_.elements().end(),
                      [&](Element x) { return atoms_[x.index].is_zero(); });
}

bool Measure::is_quasi_invariant(const Subgroup& h) const {
  if (!h.is_contained_in(domain_)) throw InputError("quasi-invariance subgroup not in the domain");
  const auto& g = group();
  for (auto phi : h.elements()) {
    const auto phi_inv = g.inverse(phi);
    for (auto x : domain_.elements()) {
      if (atoms_[x.index].is_zero() != atoms_[g.mul(phi_inv, x).index].is_zero()) return false;
    }
  }
  return true;
}

void Measure::require_full_support(const char* context) const {
  for (auto x : domain_.elements()) {
    if (atoms_[x.index].is_zero()) {
      throw PreconditionError(std::string(context) + ": measure is not quasi-invariant, atom at " +
                              group().label(x) + " is zero");
    }
  }
}

// Operations ------------------------------------------------------------------

UltraNorm set_norm(const Measure& mu, std::span<const Element> set, std::uint64_t q) {
  UltraNorm best;
  for (auto x : set) best = std::max(best, abs_q(mu.atom_or_zero(x), q));
  return best;
}

UltraNorm measure_norm(const Measure& mu, std::uint64_t q) {
  return set_norm(mu, mu.domain().elements(), q);
}

UltraNorm pointwise_norm(const Measure& mu, Element x, std::uint64_t q) {
  return abs_q(mu.atom(x), q);
}

Measure translate(const Measure& mu, Element phi, Side side) {
  const auto& domain = mu.domain();
  if (!domain.contains(phi)) throw InputError("translation by an element outside the domain");
  const auto& g = mu.group();
  const auto phi_inv = g.inverse(phi);
  std::vector<Rational> atoms(g.order());
  for (auto x : domain.elements()) {
    auto source = side == Side::left ? g.mul(phi_inv, x) : g.mul(x, phi_inv);
    atoms[x.index] = mu.atom(source);
  }
  return Measure(domain, std::move(atoms), mu.declared_probability());
}

ScalarFunction radon_nikodym(const Measure& mu, Element phi) {
  mu.require_full_support("radon_nikodym");
  const auto& domain = mu.domain();
  if (!domain.contains(phi)) throw InputError("radon_nikodym: shift outside the domain");
  const auto& g = mu.group();
  const auto phi_inv = g.inverse(phi);
  ScalarFunction rho(domain);
  for (auto x : domain.elements()) rho.set(x, mu.atom(g.mul(phi_inv, x)) / mu.atom(x));
  return rho;
}

Measure combine(const Rational& c, const Measure& a, const Rational& d, const Measure& b) {
  if (!(a.domain() == b.domain())) throw InputError("combine: domain mismatch");
  std::vector<Rational> atoms(a.group().order());
  for (auto x : a.domain().elements()) atoms[x.index] = c * a.atom(x) + d * b.atom(x);
  return Measure(a.domain(), std::move(atoms));
}

Rational integrate(const ScalarFunction& f, const Measure& mu) {
  if (!(f.domain() == mu.domain())) throw InputError("integrate: domain mismatch");
  Rational total;
  for (auto x : mu.domain().elements()) total += f(x) * mu.atom(x);
  return total;
}

}  // namespace ultrameasure

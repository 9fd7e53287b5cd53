#include "ultrameasure/rep.hpp"

#include "ultrameasure/convolve.hpp"
#include "ultrameasure/errors.hpp"
#include "ultrameasure/random.hpp"

namespace ultrameasure {

namespace {

void require_whole_group(const Measure& mu, const char* what) {
  if (!mu.domain().is_whole()) {
    throw InputError(std::string(what) + ": the measure must live on the whole group");
  }
}

}  // namespace

Operator::Operator(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Operator::Operator(std::size_t dim, std::vector<Rational> row_major)
    : dim_(dim), entries_(std::move(row_major)) {
  if (entries_.size() != dim_ * dim_) throw InputError("operator entry count is not dim*dim");
}

Operator Operator::identity(std::size_t dim) {
  Operator out(dim);
  for (std::size_t i = 0; i < dim; ++i) out.set(i, i, Rational(1));
  return out;
}

ScalarFunction Operator::apply(const ScalarFunction& f) const {
  if (!f.domain().is_whole() || f.group().order() != dim_) {
    throw InputError("operator applied to a function of the wrong dimension");
  }
  ScalarFunction out(f.domain());
  for (std::uint32_t row = 0; row < dim_; ++row) {
    Rational sum;
    for (std::uint32_t col = 0; col < dim_; ++col) {
      const auto& entry = at(row, col);
      if (!entry.is_zero()) sum += entry * f(Element{col});
    }
    out.set(Element{row}, std::move(sum));
  }
  return out;
}

Operator& Operator::operator+=(const Operator& rhs) {
  if (dim_ != rhs.dim_) throw InputError("operator sum: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Operator& Operator::operator*=(const Rational& c) {
  for (auto& e : entries_) e *= c;
  return *this;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.dim_ != b.dim_) throw InputError("operator product: dimension mismatch");
  const auto n = a.dim_;
  Operator out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto& left = a.at(i, k);
      if (left.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& right = b.at(k, j);
        if (!right.is_zero()) out.entries_[i * n + j] += left * right;
      }
    }
  }
  return out;
}

Operator weighted_regular_rep(const Measure& mu, Element h) {
  require_whole_group(mu, "weighted_regular_rep");
  auto rho = radon_nikodym(mu, h);
  const auto& g = mu.group();
  const auto h_inv = g.inverse(h);
  Operator out(g.order());
  for (auto x : g.elements()) out.set(x.index, g.mul(h_inv, x).index, rho(x));
  return out;
}

std::vector<Operator> weighted_family(const Measure& mu) {
  std::vector<Operator> out;
  for (auto g : mu.group().elements()) out.push_back(weighted_regular_rep(mu, g));
  return out;
}

Operator averaged_operator(const ScalarFunction& a, std::span<const Operator> family,
                           const Measure& mu, Element h, const Rational& lambda) {
  require_whole_group(mu, "averaged_operator");
  if (!(a.domain() == mu.domain())) throw InputError("averaged_operator: domain mismatch");
  const auto& g = mu.group();
  if (family.size() != g.order()) throw InputError("averaged_operator: family size mismatch");
  auto rho = radon_nikodym(mu, h);
  auto shifted = a.left_translate(h);
  Operator out = lambda * Operator::identity(g.order());
  for (auto x : g.elements()) {
    auto coefficient = shifted(x) * rho(x) * mu.atom(x);
    if (coefficient.is_zero()) continue;
    out += coefficient * family[x.index];
  }
  return out;
}

IsometryResult isometry_check(const Operator& t, const Measure& mu, std::uint64_t q,
                              std::uint64_t seed, std::size_t samples) {
  require_whole_group(mu, "isometry_check");
  const auto& g = mu.group();
  auto test = [&](const ScalarFunction& f) { return norm_L(t.apply(f), mu, q) == norm_L(f, mu, q); };

  std::vector<Element> order{g.identity()};
  for (auto x : g.elements()) {
    if (x != g.identity()) order.push_back(x);
  }
  for (auto x : order) {
    const Element point[] = {x};
    auto f = ScalarFunction::indicator(mu.domain(), point);
    if (!test(f)) return {false, f};
  }
  Rng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    auto f = random_function(rng, mu.domain(), q);
    if (!test(f)) return {false, f};
  }
  return {};
}

}  // namespace ultrameasure

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace ultrameasure {

/// Largest group order the library will construct.
inline constexpr std::size_t kMaxGroupOrder = 243;

/// Index of an element in its group's element list.
struct Element {
  std::uint32_t index = 0;
  friend auto operator<=>(const Element&, const Element&) = default;
};

enum class GroupKind { cyclic, heisenberg, table };

/// Finite group given by a full multiplication table.
///
/// Three families are supported:
///   cyclic(p, n)      Z/p^n under addition, element k is the residue k;
///   heisenberg(p, n)  upper unitriangular 3x3 matrices over Z/p^n, the
///                     matrix [[1,a,c],[0,1,b],[0,0,1]] has index a + P*b + P^2*c
///                     with P = p^n;
///   table             an explicit Cayley table, checked exhaustively.
class FiniteGroup {
 public:
  static FiniteGroup cyclic(std::uint32_t p, std::uint32_t n);
  static FiniteGroup heisenberg(std::uint32_t p, std::uint32_t n);
  /// Row a, column b holds a*b. Throws ValidationError unless the table is a group.
  static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> table);

  GroupKind kind() const { return kind_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t n() const { return n_; }
  /// p^n for cyclic and heisenberg groups.
  std::uint32_t modulus() const { return modulus_; }

  std::size_t order() const { return order_; }
  Element identity() const { return identity_; }

  /// Throws InputError for an index outside the group.
  Element element(std::uint32_t index) const;
  bool contains(Element a) const { return a.index < order_; }

  Element mul(Element a, Element b) const;
  Element inverse(Element a) const;

  bool is_abelian() const;

  /// All elements in index order.
  std::vector<Element> elements() const;

  /// Human-readable name, e.g. "cyclic(3,2)".
  std::string name() const;
  /// Element label: the residue, the matrix coordinates "(a,b,c)", or the index.
  std::string label(Element a) const;

  const std::vector<std::uint32_t>& cayley_table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  FiniteGroup() = default;
  void finish();  // identity, inverse table

  GroupKind kind_ = GroupKind::table;
  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t modulus_ = 0;
  std::size_t order_ = 0;
  Element identity_;
  std::vector<std::uint32_t> table_;  // order_ * order_, row-major
  std::vector<std::uint32_t> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Free-function spellings of the group law.
inline Element group_law(const FiniteGroup& g, Element a, Element b) { return g.mul(a, b); }
inline Element inverse(const FiniteGroup& g, Element a) { return g.inverse(a); }

/// Exhaustive check of associativity, identity and inverses on the stored table.
/// Returns an empty string on success, otherwise a description of the failure.
std::string check_group_axioms(const FiniteGroup& g);

/// A subgroup of a finite group, held as a sorted element list plus a membership mask.
class Subgroup {
 public:
  static Subgroup whole(GroupPtr group);
  static Subgroup trivial(GroupPtr group);
  /// Throws ValidationError naming the offending pair if the subset is not
  /// closed under the product or inverse, or lacks the identity.
  static Subgroup from_indices(GroupPtr group, std::span<const std::uint32_t> indices);

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }

  std::span<const Element> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element a) const { return a.index < mask_.size() && mask_[a.index]; }
  bool is_whole() const { return elements_.size() == group_->order(); }

  /// True if every element of this subgroup lies in `other` (same group required).
  bool is_contained_in(const Subgroup& other) const;

  std::vector<std::uint32_t> indices() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  Subgroup(GroupPtr group, std::vector<Element> elements);

  GroupPtr group_;
  std::vector<Element> elements_;
  std::vector<bool> mask_;
};

/// Descending chain G_0 ⊇ G_1 ⊇ ... ⊇ G_m of subgroups of one group.
class SubgroupChain {
 public:
  /// Validates closure of each level and containment of level i+1 in level i.
  static SubgroupChain from_levels(GroupPtr group,
                                   const std::vector<std::vector<std::uint32_t>>& levels);
  static SubgroupChain from_subgroups(std::vector<Subgroup> levels);

  /// The default chain of a group:
  ///   cyclic(p,n):      p^i Z/p^n for i = 0..n;
  ///   heisenberg(p,n):  H, {a=0}, {a=b=0}, {e};
  ///   table:            G, {e}.
  static SubgroupChain standard(GroupPtr group);

  /// Heisenberg congruence chain: level k holds matrices with a, b, c ≡ 0 mod p^k.
  static SubgroupChain congruence(GroupPtr group);

  std::size_t length() const { return levels_.size(); }
  const Subgroup& level(std::size_t i) const { return levels_.at(i); }
  const std::vector<Subgroup>& levels() const { return levels_; }
  const FiniteGroup& group() const { return levels_.front().group(); }
  const GroupPtr& group_ptr() const { return levels_.front().group_ptr(); }

  std::vector<std::size_t> sizes() const;

  friend bool operator==(const SubgroupChain& a, const SubgroupChain& b) {
    return a.levels_ == b.levels_;
  }

 private:
  explicit SubgroupChain(std::vector<Subgroup> levels) : levels_(std::move(levels)) {}
  std::vector<Subgroup> levels_;
};

/// Reduction Z/p^m -> Z/p^n (m >= n), a surjective homomorphism.
/// Throws InputError unless both groups are cyclic over the same p with m >= n.
Element quotient_project(const FiniteGroup& fine, const FiniteGroup& coarse, Element a);

}  // namespace ultrameasure

#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gerbal/error.hpp"

namespace gerbal {

using Element = std::uint32_t;

/// Finite group given by its Cayley table. Element 0 is always the identity.
///
/// Instances are immutable once validated; everything downstream (cochains,
/// groupoids, algebras) indexes its tables by element number, so the table
/// layout is part of the external contract.
class FiniteGroup {
 public:
  /// Validates the table and re-indexes the identity to 0 when necessary.
  /// Throws ValidationError naming the first failing element or triple.
  static FiniteGroup from_table(std::string name,
                                std::vector<std::vector<Element>> table);

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }

  Element mul(Element a, Element b) const noexcept {
    return mult_[static_cast<std::size_t>(a) * order_ + b];
  }
  Element inv(Element a) const noexcept { return inv_[a]; }
  /// s a s^-1
  Element conj(Element s, Element a) const noexcept {
    return mul(mul(s, a), inv(s));
  }
  Element power(Element a, std::uint64_t k) const noexcept;
  std::size_t element_order(Element a) const noexcept;

  bool is_abelian() const noexcept;
  std::vector<std::vector<Element>> table() const;

  /// Full n^3 associativity scan; from_table already runs it, tests call it
  /// on constructed groups.
  bool check_associativity() const noexcept;

 private:
  FiniteGroup() = default;

  std::string name_;
  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup stored as the sorted list of parent element indices.
class SubgroupRef {
 public:
  /// Checks closure; throws ValidationError if `members` is not a subgroup.
  SubgroupRef(GroupPtr parent, std::vector<Element> members);

  const GroupPtr& parent() const noexcept { return parent_; }
  const std::vector<Element>& members() const noexcept { return members_; }
  std::size_t order() const noexcept { return members_.size(); }
  bool contains(Element g) const noexcept;
  /// Position of g in members(), i.e. its index inside the subgroup's own
  /// numbering. Throws if g is not a member.
  Element local_index(Element g) const;

  /// The subgroup as a group in its own right: element i is members()[i].
  GroupPtr as_group() const;

  friend bool operator==(const SubgroupRef& a, const SubgroupRef& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Element> members_;
};

// Constructors. Names are the constructor spec strings so that cochain files
// can refer back to the group by name.
GroupPtr make_cyclic(std::size_t n);
/// Order 2n. Rotations r^i are elements 0..n-1, reflections s r^i are n..2n-1.
GroupPtr make_dihedral(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order, (p q)(x) = p(q(x)).
GroupPtr make_symmetric(std::size_t n);
/// Elements 1, i, j, k, -1, -i, -j, -k in that order.
GroupPtr make_quaternion8();
/// (a, b) has index a * |B| + b.
GroupPtr make_direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// "cyclic:4", "dihedral:3", "symmetric:3", "quaternion:8",
/// "product:(A,B)" with nested specs.
GroupPtr parse_group_spec(const std::string& spec);

std::vector<Element> center(const FiniteGroup& g);
std::vector<Element> conjugacy_class(const FiniteGroup& g, Element a);
/// Classes ordered by their minimal element.
std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g);

SubgroupRef centralizer(const GroupPtr& g, Element a);
SubgroupRef normalizer(const GroupPtr& g, const SubgroupRef& h);
SubgroupRef generated_subgroup(const GroupPtr& g, std::span<const Element> gens);
SubgroupRef trivial_subgroup(const GroupPtr& g);
SubgroupRef whole_group(const GroupPtr& g);
/// s H s^-1
SubgroupRef conjugate_subgroup(const SubgroupRef& h, Element s);

inline constexpr std::size_t kDefaultSubgroupBound = 64;

/// Every subgroup exactly once, grouped into conjugacy classes. Within a class
/// and across classes the order is by size, then by member list.
std::vector<std::vector<SubgroupRef>> enumerate_subgroups(
    const GroupPtr& g, std::size_t order_bound = kDefaultSubgroupBound);

/// Minimal element of each left coset rH, ascending.
std::vector<Element> coset_representatives(const SubgroupRef& h);

}  // namespace gerbal

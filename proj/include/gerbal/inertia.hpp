#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gerbal/cochain.hpp"
#include "gerbal/group.hpp"
#include "gerbal/parallel.hpp"

namespace gerbal {

/// Arrow s: g -> s g s^-1 of the inertia groupoid.
struct Arrow {
  Element source;  // g
  Element by;      // s
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// The inertia groupoid of a finite group, materialised as objects = G and
/// arrows = G x G. Composition "apply s first":
///   (s g s^-1, t) o (g, s) = (g, t s).
class InertiaGroupoid {
 public:
  explicit InertiaGroupoid(GroupPtr group);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  std::size_t object_count() const noexcept { return group_->order(); }
  std::size_t arrow_count() const noexcept { return group_->order() * group_->order(); }

  Element target(Arrow a) const noexcept { return group_->conj(a.by, a.source); }
  Arrow identity(Element g) const noexcept { return {g, 0}; }
  Arrow inverse(Arrow a) const noexcept { return {target(a), group_->inv(a.by)}; }
  bool composable(Arrow first, Arrow second) const noexcept {
    return target(first) == second.source;
  }
  /// `first` then `second`; throws ValidationError if not composable.
  Arrow compose(Arrow first, Arrow second) const;

  std::size_t arrow_index(Arrow a) const noexcept {
    return static_cast<std::size_t>(a.source) * group_->order() + a.by;
  }
  Arrow arrow_at(std::size_t i) const noexcept {
    const std::size_t n = group_->order();
    return {static_cast<Element>(i / n), static_cast<Element>(i % n)};
  }

  /// Connected components = conjugacy classes.
  std::vector<std::vector<Element>> components() const;
  /// Automorphisms of object g = centraliser of g.
  SubgroupRef automorphisms(Element g) const;

 private:
  GroupPtr group_;
};

/// 1-cochain on arrows (g, s); entry index g * n + s.
class GroupoidCochain1 {
 public:
  GroupoidCochain1(GroupPtr group, Int modulus);
  GroupoidCochain1(GroupPtr group, Int modulus, std::vector<Int> entries);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  Int operator()(Element g, Element s) const noexcept {
    return entries_[static_cast<std::size_t>(g) * group_->order() + s];
  }
  void set(Element g, Element s, Int v);
  bool normalized() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const GroupoidCochain1&, const GroupoidCochain1&) = default;

 private:
  GroupPtr group_;
  Int modulus_;
  std::vector<Int> entries_;
};

/// 2-cochain on composable pairs g -s-> sgs^-1 -t-> ..., indexed (g, s, t).
class GroupoidCochain2 {
 public:
  GroupoidCochain2(GroupPtr group, Int modulus);
  GroupoidCochain2(GroupPtr group, Int modulus, std::vector<Int> entries);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  Int operator()(Element g, Element s, Element t) const noexcept {
    const std::size_t n = group_->order();
    return entries_[(static_cast<std::size_t>(g) * n + s) * n + t];
  }
  void set(Element g, Element s, Element t, Int v);
  /// Zero whenever s = 1 or t = 1.
  bool normalized() const noexcept;
  bool is_zero() const noexcept;

  friend bool operator==(const GroupoidCochain2&, const GroupoidCochain2&) = default;

 private:
  GroupPtr group_;
  Int modulus_;
  std::vector<Int> entries_;
};

InertiaGroupoid build_inertia(GroupPtr group);

/// tau(alpha)(g -s-> h -t-> k) = alpha(t,s,g) + alpha(k,t,s) - alpha(t,h,s).
/// Throws ValidationError unless alpha is a normalised 3-cocycle.
GroupoidCochain2 transgress3(const Cochain& alpha, Jobs jobs = {});

/// tau(theta)(g, h) = theta(h, g) - theta(h g h^-1, h).
GroupoidCochain1 transgress2(const Cochain& theta);

/// (d xi)(g, s, t) = xi(s g s^-1, t) + xi(g, s) - xi(g, t s).
GroupoidCochain2 groupoid_coboundary(const GroupoidCochain1& xi);

struct GroupoidCocycleVerdict {
  bool cocycle = true;
  std::optional<std::vector<Element>> witness;  // (g, s, t, u)
  std::uint64_t checked = 0;
};

/// psi(g,s,t) + psi(g,ts,u) = psi(h1,t,u) + psi(g,s,ut) on composable triples
/// g -s-> h1 -t-> h2 -u-> h3.
GroupoidCocycleVerdict is_groupoid_2cocycle(const GroupoidCochain2& psi, Jobs jobs = {});

/// Arrow of the central extension: a decoration in Z/N and an arrow of the
/// inertia groupoid.
struct DecoratedArrow {
  Int decoration;
  Arrow arrow;
  friend bool operator==(const DecoratedArrow&, const DecoratedArrow&) = default;
};

/// (x1, (g,s)) then (x2, (sgs^-1, t)) -> (x1 + x2 + psi(g,s,t), (g, ts)).
DecoratedArrow extension_compose(const GroupoidCochain2& psi, DecoratedArrow first,
                                 DecoratedArrow second);

}  // namespace gerbal

#include "gerbal/inertia.hpp"

#include <string>

#include "gerbal/error.hpp"

namespace gerbal {

InertiaGroupoid::InertiaGroupoid(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw ValidationError("inertia groupoid without group");
}

Arrow InertiaGroupoid::compose(Arrow first, Arrow second) const {
  if (!composable(first, second))
    throw ValidationError("arrows (" + std::to_string(first.source) + "," +
                          std::to_string(first.by) + ") and (" +
                          std::to_string(second.source) + "," +
                          std::to_string(second.by) + ") are not composable");
  return {first.source, group_->mul(second.by, first.by)};
}

std::vector<std::vector<Element>> InertiaGroupoid::components() const {
  return conjugacy_classes(*group_);
}

SubgroupRef InertiaGroupoid::automorphisms(Element g) const {
  return centralizer(group_, g);
}

InertiaGroupoid build_inertia(GroupPtr group) { return InertiaGroupoid(std::move(group)); }

GroupoidCochain1::GroupoidCochain1(GroupPtr group, Int modulus)
    : group_(std::move(group)), modulus_(modulus) {
  if (modulus_ < 1) throw ValidationError("modulus must be positive");
  entries_.assign(group_->order() * group_->order(), 0);
}

GroupoidCochain1::GroupoidCochain1(GroupPtr group, Int modulus, std::vector<Int> entries)
    : GroupoidCochain1(std::move(group), modulus) {
  if (entries.size() != entries_.size())
    throw ValidationError("groupoid 1-cochain has wrong number of entries");
  for (Int e : entries)
    if (e < 0 || e >= modulus_) throw ValidationError("groupoid cochain entry out of range");
  entries_ = std::move(entries);
}

void GroupoidCochain1::set(Element g, Element s, Int v) {
  entries_.at(static_cast<std::size_t>(g) * group_->order() + s) = mod(v, modulus_);
}

bool GroupoidCochain1::normalized() const noexcept {
  for (Element g = 0; g < group_->order(); ++g)
    if ((*this)(g, 0) != 0) return false;
  return true;
}

bool GroupoidCochain1::is_zero() const noexcept {
  for (Int e : entries_)
    if (e != 0) return false;
  return true;
}

GroupoidCochain2::GroupoidCochain2(GroupPtr group, Int modulus)
    : group_(std::move(group)), modulus_(modulus) {
  if (modulus_ < 1) throw ValidationError("modulus must be positive");
  const std::size_t n = group_->order();
  entries_.assign(n * n * n, 0);
}

GroupoidCochain2::GroupoidCochain2(GroupPtr group, Int modulus, std::vector<Int> entries)
    : GroupoidCochain2(std::move(group), modulus) {
  if (entries.size() != entries_.size())
    throw ValidationError("groupoid 2-cochain has wrong number of entries");
  for (Int e : entries)
    if (e < 0 || e >= modulus_) throw ValidationError("groupoid cochain entry out of range");
  entries_ = std::move(entries);
}

void GroupoidCochain2::set(Element g, Element s, Element t, Int v) {
  const std::size_t n = group_->order();
  entries_.at((static_cast<std::size_t>(g) * n + s) * n + t) = mod(v, modulus_);
}

bool GroupoidCochain2::normalized() const noexcept {
  const std::size_t n = group_->order();
  for (Element g = 0; g < n; ++g)
    for (Element x = 0; x < n; ++x)
      if ((*this)(g, 0, x) != 0 || (*this)(g, x, 0) != 0) return false;
  return true;
}

bool GroupoidCochain2::is_zero() const noexcept {
  for (Int e : entries_)
    if (e != 0) return false;
  return true;
}

GroupoidCochain2 transgress3(const Cochain& alpha, Jobs jobs) {
  if (alpha.degree() != 3) throw ValidationError("transgress3 needs a degree-3 cochain");
  if (!alpha.normalized()) throw ValidationError("transgress3 needs a normalised cochain");
  if (auto v = is_cocycle(alpha, jobs); !v.cocycle)
    throw ValidationError("transgress3: alpha is not a 3-cocycle");
  const FiniteGroup& G = alpha.group();
  const Element n = static_cast<Element>(G.order());
  GroupoidCochain2 psi(alpha.group_ptr(), alpha.modulus());
  for (Element g = 0; g < n; ++g)
    for (Element s = 0; s < n; ++s) {
      const Element h = G.conj(s, g);
      for (Element t = 0; t < n; ++t) {
        const Element k = G.conj(t, h);
        psi.set(g, s, t, alpha(t, s, g) + alpha(k, t, s) - alpha(t, h, s));
      }
    }
  if (!psi.normalized()) throw Error("transgress3: result not normalised (bug)");
  if (!is_groupoid_2cocycle(psi, jobs).cocycle)
    throw Error("transgress3: result is not a groupoid 2-cocycle (bug)");
  return psi;
}

GroupoidCochain1 transgress2(const Cochain& theta) {
  if (theta.degree() != 2) throw ValidationError("transgress2 needs a degree-2 cochain");
  const FiniteGroup& G = theta.group();
  const Element n = static_cast<Element>(G.order());
  GroupoidCochain1 xi(theta.group_ptr(), theta.modulus());
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) xi.set(g, h, theta(h, g) - theta(G.conj(h, g), h));
  return xi;
}

GroupoidCochain2 groupoid_coboundary(const GroupoidCochain1& xi) {
  const FiniteGroup& G = xi.group();
  const Element n = static_cast<Element>(G.order());
  GroupoidCochain2 out(xi.group_ptr(), xi.modulus());
  for (Element g = 0; g < n; ++g)
    for (Element s = 0; s < n; ++s) {
      const Element h = G.conj(s, g);
      for (Element t = 0; t < n; ++t) out.set(g, s, t, xi(h, t) + xi(g, s) - xi(g, G.mul(t, s)));
    }
  return out;
}

GroupoidCocycleVerdict is_groupoid_2cocycle(const GroupoidCochain2& psi, Jobs jobs) {
  const FiniteGroup& G = psi.group();
  const std::size_t n = G.order();
  const Int m = psi.modulus();
  // one chunk unit = one (g, s) pair
  auto firsts = map_chunks(n * n, jobs, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const Element g = static_cast<Element>(i / n), s = static_cast<Element>(i % n);
      const Element h1 = G.conj(s, g);
      for (Element t = 0; t < n; ++t) {
        const Element ts = G.mul(t, s);
        for (Element u = 0; u < n; ++u) {
          const Int lhs = psi(g, s, t) + psi(g, ts, u);
          const Int rhs = psi(h1, t, u) + psi(g, s, G.mul(u, t));
          if (mod(lhs - rhs, m) != 0)
            return std::optional<std::vector<Element>>(std::vector<Element>{g, s, t, u});
        }
      }
    }
    return std::optional<std::vector<Element>>();
  });
  GroupoidCocycleVerdict v;
  v.checked = n * n * n * n;
  for (auto& f : firsts)
    if (f) {
      v.cocycle = false;
      v.witness = std::move(f);
      break;
    }
  return v;
}

DecoratedArrow extension_compose(const GroupoidCochain2& psi, DecoratedArrow first,
                                 DecoratedArrow second) {
  InertiaGroupoid lambda(psi.group_ptr());
  const Arrow composite = lambda.compose(first.arrow, second.arrow);
  const Int x = first.decoration + second.decoration +
                psi(first.arrow.source, first.arrow.by, second.arrow.by);
  return {mod(x, psi.modulus()), composite};
}

}  // namespace gerbal

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gerbal/group.hpp"
#include "gerbal/parallel.hpp"
#include "gerbal/zmod.hpp"

namespace gerbal {

/// Dense cochain G^k -> Z/N. Entry e stands for the root of unity zeta_N^e.
/// Tuples are encoded mixed-radix, first argument most significant.
class Cochain {
 public:
  Cochain(GroupPtr group, int degree, Int modulus);
  Cochain(GroupPtr group, int degree, Int modulus, std::vector<Int> entries);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  int degree() const noexcept { return degree_; }
  Int modulus() const noexcept { return modulus_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<Int>& entries() const noexcept { return entries_; }

  template <class... E>
  Int operator()(E... args) const noexcept {
    return entries_[index_of(args...)];
  }
  Int at(std::span<const Element> args) const;
  Int at_index(std::size_t i) const noexcept { return entries_[i]; }
  void set(std::span<const Element> args, Int value);
  void set_index(std::size_t i, Int value) noexcept { entries_[i] = gerbal::mod(value, modulus_); }

  std::size_t index(std::span<const Element> args) const;
  std::vector<Element> tuple(std::size_t index) const;

  /// True iff every entry with an identity argument is 0.
  bool normalized() const noexcept;
  bool is_zero() const noexcept;

  /// Entries multiplied by q into modulus N*q (zeta_N^e = zeta_{Nq}^{qe}).
  Cochain lifted(Int q) const;
  Cochain negated() const;

  friend bool operator==(const Cochain& a, const Cochain& b) noexcept {
    return a.group_ == b.group_ && a.degree_ == b.degree_ &&
           a.modulus_ == b.modulus_ && a.entries_ == b.entries_;
  }

 private:
  template <class... E>
  std::size_t index_of(E... args) const noexcept {
    std::size_t idx = 0;
    const std::size_t n = group_->order();
    ((idx = idx * n + static_cast<std::size_t>(args)), ...);
    return idx;
  }

  GroupPtr group_;
  int degree_;
  Int modulus_;
  std::vector<Int> entries_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);

inline constexpr int kMaxDegree = 4;

/// Standard inhomogeneous coboundary for the trivial action:
///   (dc)(g1..g{k+1}) = c(g2..) + sum_i (-1)^i c(..g_i g_{i+1}..) + (-1)^{k+1} c(g1..gk)
/// In degree 2: d theta(g,h,k) = theta(h,k) - theta(gh,k) + theta(g,hk) - theta(g,h).
Cochain coboundary(const Cochain& c, Jobs jobs = {});

/// Coboundary for an action of G on Z/N by unit multipliers
/// (`action[g]` multiplies); the first face is twisted by g1.
Cochain twisted_coboundary(const Cochain& c, std::span<const Int> action);

struct CocycleVerdict {
  bool cocycle = true;
  std::optional<std::vector<Element>> witness;  // lexicographically first failure
  std::uint64_t checked = 0;
};

/// Degrees 1..3. Throws UnsupportedError for degree 0 or 4.
CocycleVerdict is_cocycle(const Cochain& c, Jobs jobs = {});

/// Re-indexed to H's own numbering (members()[i] is element i).
Cochain restrict(const Cochain& c, const SubgroupRef& h);

/// Pullback along a homomorphism phi: G -> Q given by images.
Cochain inflate(const Cochain& c, GroupPtr source, std::span<const Element> phi);

/// a(x1..xk) + b(y1..yk) on A x B (encoding of make_direct_product).
/// Moduli are brought to their lcm.
Cochain external_product(const Cochain& a, const Cochain& b, GroupPtr product);

/// alpha(a,b,c) = k * a * floor((b + c) / n) mod n on cyclic:n.
Cochain standard_cyclic_3cocycle(std::size_t n, Int k);
Cochain standard_cyclic_3cocycle(GroupPtr cyclic, Int k);

/// Normalised cochain with uniformly drawn entries; deterministic in `seed`.
Cochain random_cochain(GroupPtr group, int degree, Int modulus, std::uint64_t seed);

/// Checks that phi: G -> Q is a homomorphism; throws ValidationError if not.
void check_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                        std::span<const Element> phi);

}  // namespace gerbal

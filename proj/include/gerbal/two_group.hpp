#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gerbal/cochain.hpp"
#include "gerbal/group.hpp"
#include "gerbal/parallel.hpp"

namespace gerbal {

/// Skeletal categorical group (G, Z/N, alpha). `action[g]` is the unit of Z/N
/// by which g acts; all ones for the trivial action.
class SkeletalTwoGroup {
 public:
  /// Throws ValidationError if the action is not a homomorphism into units,
  /// alpha is not normalised, or alpha fails the twisted 3-cocycle identity.
  SkeletalTwoGroup(Cochain alpha, std::vector<Int> action);
  /// Trivial action.
  explicit SkeletalTwoGroup(Cochain alpha);

  const FiniteGroup& group() const noexcept { return alpha_.group(); }
  const GroupPtr& group_ptr() const noexcept { return alpha_.group_ptr(); }
  Int modulus() const noexcept { return alpha_.modulus(); }
  const Cochain& alpha() const noexcept { return alpha_; }
  const std::vector<Int>& action() const noexcept { return action_; }
  Int act(Element g, Int a) const noexcept { return mod(action_[g] * a, modulus()); }
  bool trivial_action() const noexcept;

 private:
  Cochain alpha_;
  std::vector<Int> action_;
};

/// Same group table, modulus, action and alpha.
bool same_two_group(const SkeletalTwoGroup& a, const SkeletalTwoGroup& b);

/// 1-morphism (rho, f, gamma) from (H, Z/M, beta) to (G, Z/N, alpha).
/// f is the additive map x -> x * f_one.
struct TwoGroupHom {
  SkeletalTwoGroup source;
  SkeletalTwoGroup target;
  std::vector<Element> rho;
  Int f_one = 0;
  Cochain gamma;  // degree 2 on H, modulus N
};

/// 2-morphism with component s in G and 1-cochain eta on H (modulus N).
struct TwoGroupTransformation {
  Element s = 0;
  Cochain eta;
};

struct TwoGroupModification {
  Int omega = 0;
};

inline constexpr std::size_t kWitnessCap = 10;

struct TwoGroupReport {
  bool valid = true;
  std::vector<std::vector<Element>> witnesses;  // first failures, capped
  std::uint64_t checked = 0;
  std::vector<std::string> problems;  // structural failures (rho, f, s)
  bool unit_ok = true;                // derived unit identities
};

/// Hexagon:
///   gamma(gh,k) + gamma(g,h) - gamma(g,hk) - rho(g).gamma(h,k)
///     = alpha(rho g, rho h, rho k) - f(beta(g,h,k)).
/// Also checks rho is a homomorphism, f is well defined and equivariant, and
/// the unit identities gamma(1,h) = gamma(1,1), gamma(h,1) = rho(h).gamma(1,1).
/// Throws ValidationError on mismatched shapes.
TwoGroupReport verify_hom(const TwoGroupHom& h, Jobs jobs = {});

/// Eight-term equation, with rho = from.rho and sigma = to.rho:
///   sigma(g).eta(h) + eta(g) - eta(gh)
///     = s.gamma1(g,h) - gamma2(g,h) + alpha(sg,sh,s) + alpha(s,rg,rh) - alpha(sg,s,rh)
/// (sg = sigma(g), rg = rho(g)). Also requires sigma(g) s = s rho(g) and checks
/// the unit identity gamma2(1,1) = s.gamma1(1,1) - eta(1).
/// Throws ValidationError if from and to do not share source and target.
TwoGroupReport verify_transformation(const TwoGroupTransformation& t, const TwoGroupHom& from,
                                     const TwoGroupHom& to, Jobs jobs = {});

/// sigma(g).omega - omega = zeta(g) - eta(g), where eta = t1.eta, zeta = t2.eta
/// and sigma = to.rho. Throws ValidationError if t1.s != t2.s.
TwoGroupReport verify_modification(const TwoGroupModification& m,
                                   const TwoGroupTransformation& t1,
                                   const TwoGroupTransformation& t2, const TwoGroupHom& to);

}  // namespace gerbal

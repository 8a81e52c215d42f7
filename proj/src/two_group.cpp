#include "gerbal/two_group.hpp"

#include <functional>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

std::vector<Int> ones(std::size_t n) { return std::vector<Int>(n, 1); }

// Runs check(i) over [0, total) and keeps the first kWitnessCap failures in
// index order.
TwoGroupReport scan(std::size_t total, Jobs jobs,
                    const std::function<bool(std::size_t)>& ok,
                    const std::function<std::vector<Element>(std::size_t)>& decode) {
  auto chunks = map_chunks(total, jobs, [&](std::size_t b, std::size_t e) {
    std::vector<std::size_t> bad;
    for (std::size_t i = b; i < e && bad.size() < kWitnessCap; ++i)
      if (!ok(i)) bad.push_back(i);
    return bad;
  });
  TwoGroupReport r;
  r.checked = total;
  for (const auto& c : chunks)
    for (std::size_t i : c) {
      r.valid = false;
      if (r.witnesses.size() < kWitnessCap) r.witnesses.push_back(decode(i));
    }
  return r;
}

void require_shape(const Cochain& c, const FiniteGroup& g, int degree, Int modulus,
                   const char* what) {
  if (&c.group() != &g && c.group().table() != g.table())
    throw ValidationError(std::string(what) + " lives on the wrong group");
  if (c.degree() != degree)
    throw ValidationError(std::string(what) + " must have degree " + std::to_string(degree));
  if (c.modulus() != modulus)
    throw ValidationError(std::string(what) + " must have modulus " + std::to_string(modulus));
}

}  // namespace

SkeletalTwoGroup::SkeletalTwoGroup(Cochain alpha, std::vector<Int> action)
    : alpha_(std::move(alpha)), action_(std::move(action)) {
  const FiniteGroup& G = alpha_.group();
  const Int n = alpha_.modulus();
  if (alpha_.degree() != 3) throw ValidationError("two-group alpha must have degree 3");
  if (action_.size() != G.order())
    throw ValidationError("action table size does not match group order");
  for (Element g = 0; g < G.order(); ++g) {
    action_[g] = mod(action_[g], n);
    if (gcd(action_[g], n) != 1)
      throw ValidationError("action of element " + std::to_string(g) + " is not a unit");
  }
  if (action_[0] != mod(1, n)) throw ValidationError("identity must act trivially");
  for (Element g = 0; g < G.order(); ++g)
    for (Element h = 0; h < G.order(); ++h)
      if (action_[G.mul(g, h)] != mod(action_[g] * action_[h], n))
        throw ValidationError("action is not a homomorphism at (" + std::to_string(g) + "," +
                              std::to_string(h) + ")");
  if (!alpha_.normalized()) throw ValidationError("two-group alpha must be normalised");
  if (!twisted_coboundary(alpha_, action_).is_zero())
    throw ValidationError("alpha is not a 3-cocycle for the given action");
}

SkeletalTwoGroup::SkeletalTwoGroup(Cochain alpha)
    : SkeletalTwoGroup(alpha, ones(alpha.group().order())) {}

bool SkeletalTwoGroup::trivial_action() const noexcept {
  for (Int a : action_)
    if (a != mod(1, modulus())) return false;
  return true;
}

bool same_two_group(const SkeletalTwoGroup& a, const SkeletalTwoGroup& b) {
  if (a.group_ptr() != b.group_ptr() && a.group().table() != b.group().table()) return false;
  return a.modulus() == b.modulus() && a.action() == b.action() &&
         a.alpha().entries() == b.alpha().entries();
}

TwoGroupReport verify_hom(const TwoGroupHom& hom, Jobs jobs) {
  const FiniteGroup& H = hom.source.group();
  const FiniteGroup& G = hom.target.group();
  const Int m = hom.source.modulus(), n = hom.target.modulus();
  const std::size_t hn = H.order();
  if (hom.rho.size() != hn) throw ValidationError("rho must have one image per element of H");
  for (Element x : hom.rho)
    if (x >= G.order()) throw ValidationError("rho image out of range");
  require_shape(hom.gamma, H, 2, n, "gamma");

  std::vector<std::string> problems;
  for (Element a = 0; a < hn; ++a)
    for (Element b = 0; b < hn; ++b)
      if (hom.rho[H.mul(a, b)] != G.mul(hom.rho[a], hom.rho[b])) {
        problems.push_back("rho is not a homomorphism at (" + std::to_string(a) + "," +
                           std::to_string(b) + ")");
        a = static_cast<Element>(hn);
        break;
      }
  if (mod(m * hom.f_one, n) != 0)
    problems.push_back("f is not well defined: N does not divide M*f(1)");
  for (Element h = 0; h < hn; ++h)
    if (mod(hom.source.action()[h] * hom.f_one, n) != hom.target.act(hom.rho[h], hom.f_one)) {
      problems.push_back("f is not equivariant at " + std::to_string(h));
      break;
    }

  const auto& rho = hom.rho;
  const Cochain& gam = hom.gamma;
  const Cochain& alpha = hom.target.alpha();
  const Cochain& beta = hom.source.alpha();
  auto ok = [&](std::size_t i) {
    const Element g = static_cast<Element>(i / (hn * hn));
    const Element h = static_cast<Element>(i / hn % hn);
    const Element k = static_cast<Element>(i % hn);
    const Int lhs = gam(H.mul(g, h), k) + gam(g, h) - gam(g, H.mul(h, k)) -
                    hom.target.act(rho[g], gam(h, k));
    const Int rhs = alpha(rho[g], rho[h], rho[k]) - beta(g, h, k) * hom.f_one;
    return mod(lhs - rhs, n) == 0;
  };
  auto decode = [&](std::size_t i) {
    return std::vector<Element>{static_cast<Element>(i / (hn * hn)),
                                static_cast<Element>(i / hn % hn), static_cast<Element>(i % hn)};
  };
  TwoGroupReport r = scan(hn * hn * hn, jobs, ok, decode);

  const Int a = gam(0, 0);
  for (Element h = 0; h < hn; ++h)
    if (gam(0, h) != a || gam(h, 0) != hom.target.act(rho[h], a)) r.unit_ok = false;
  if (r.valid && !r.unit_ok) throw Error("hexagon holds but the unit identities fail (bug)");

  r.problems = std::move(problems);
  if (!r.problems.empty()) r.valid = false;
  return r;
}

TwoGroupReport verify_transformation(const TwoGroupTransformation& t, const TwoGroupHom& from,
                                     const TwoGroupHom& to, Jobs jobs) {
  if (!same_two_group(from.source, to.source) || !same_two_group(from.target, to.target))
    throw ValidationError("transformation endpoints must share source and target");
  const FiniteGroup& H = from.source.group();
  const FiniteGroup& G = from.target.group();
  const Int n = from.target.modulus();
  const std::size_t hn = H.order();
  if (t.s >= G.order()) throw ValidationError("s out of range");
  if (from.rho.size() != hn || to.rho.size() != hn)
    throw ValidationError("rho must have one image per element of H");
  require_shape(t.eta, H, 1, n, "eta");
  require_shape(from.gamma, H, 2, n, "gamma1");
  require_shape(to.gamma, H, 2, n, "gamma2");

  const auto& rho = from.rho;
  const auto& sig = to.rho;
  const Element s = t.s;
  const Cochain& eta = t.eta;
  const Cochain& g1 = from.gamma;
  const Cochain& g2 = to.gamma;
  const Cochain& alpha = from.target.alpha();
  const SkeletalTwoGroup& tg = from.target;

  std::vector<std::string> problems;
  for (Element g = 0; g < hn; ++g)
    if (G.mul(sig[g], s) != G.mul(s, rho[g])) {
      problems.push_back("sigma(" + std::to_string(g) + ") s != s rho(" + std::to_string(g) +
                         ")");
      break;
    }

  auto ok = [&](std::size_t i) {
    const Element g = static_cast<Element>(i / hn), h = static_cast<Element>(i % hn);
    const Int lhs = tg.act(sig[g], eta(h)) + eta(g) - eta(H.mul(g, h));
    const Int rhs = tg.act(s, g1(g, h)) - g2(g, h) + alpha(sig[g], sig[h], s) +
                    alpha(s, rho[g], rho[h]) - alpha(sig[g], s, rho[h]);
    return mod(lhs - rhs, n) == 0;
  };
  auto decode = [&](std::size_t i) {
    return std::vector<Element>{static_cast<Element>(i / hn), static_cast<Element>(i % hn)};
  };
  TwoGroupReport r = scan(hn * hn, jobs, ok, decode);
  r.unit_ok = g2(0, 0) == mod(tg.act(s, g1(0, 0)) - eta(0), n);
  if (r.valid && !r.unit_ok)
    throw Error("eight-term equation holds but the unit identity fails (bug)");
  r.problems = std::move(problems);
  if (!r.problems.empty()) r.valid = false;
  return r;
}

TwoGroupReport verify_modification(const TwoGroupModification& m,
                                   const TwoGroupTransformation& t1,
                                   const TwoGroupTransformation& t2, const TwoGroupHom& to) {
  if (t1.s != t2.s)
    throw ValidationError("modification needs transformations with the same s (" +
                          std::to_string(t1.s) + " vs " + std::to_string(t2.s) + ")");
  const FiniteGroup& H = to.source.group();
  const Int n = to.target.modulus();
  const std::size_t hn = H.order();
  if (to.rho.size() != hn) throw ValidationError("rho must have one image per element of H");
  require_shape(t1.eta, H, 1, n, "eta");
  require_shape(t2.eta, H, 1, n, "zeta");
  auto ok = [&](std::size_t i) {
    const Element g = static_cast<Element>(i);
    const Int lhs = to.target.act(to.rho[g], m.omega) - m.omega;
    return mod(lhs - (t2.eta(g) - t1.eta(g)), n) == 0;
  };
  auto decode = [](std::size_t i) { return std::vector<Element>{static_cast<Element>(i)}; };
  return scan(hn, {}, ok, decode);
}

}  // namespace gerbal

#include "gerbal/modcat.hpp"

#include <map>
#include <numeric>

#include "gerbal/cohomology.hpp"
#include "gerbal/error.hpp"

namespace gerbal {

namespace {

void check_alpha(const Cochain& alpha) {
  if (alpha.degree() != 3) throw ValidationError("alpha must have degree 3");
  if (!alpha.normalized()) throw ValidationError("alpha must be normalised");
  if (!is_cocycle(alpha).cocycle) throw ValidationError("alpha is not a 3-cocycle");
}

Int resolve_lift(const Cochain& alpha, Int lift_factor) {
  if (lift_factor < 0) throw ValidationError("lift factor must be positive");
  return lift_factor == 0 ? default_lift_factor(alpha.group()) : lift_factor;
}

Cochain rebase(const GroupPtr& g, const Cochain& c) {
  return Cochain(g, c.degree(), c.modulus(), c.entries());
}

// Everything needed to compare theta-classes on one subgroup H.
struct SubgroupContext {
  const Cochain& alpha;
  const SubgroupRef& h;
  Int q;
  GroupPtr hg;
  Cochain theta0;
  CoboundarySolver solver;

  SubgroupContext(const Cochain& a, const SubgroupRef& sub, Int lift, Cochain witness)
      : alpha(a),
        h(sub),
        q(lift),
        hg(witness.group_ptr()),
        theta0(std::move(witness)),
        solver(hg, 2, theta0.modulus() * lift) {}

  Int label_modulus() const { return theta0.modulus(); }

  std::vector<Int> key(const Cochain& theta) const {
    return solver.class_key((rebase(hg, theta) - theta0).lifted(q));
  }

  // s-conjugate of theta plus q * Omega_s, a label on H again (s normalises H).
  Cochain conjugate(const Cochain& theta, Element s) const {
    const FiniteGroup& G = *h.parent();
    const std::size_t m = h.order();
    const Int n = alpha.modulus();
    const Element si = G.inv(s);
    std::vector<Element> back(m);  // local index of s^-1 x s
    for (std::size_t i = 0; i < m; ++i)
      back[i] = h.local_index(G.mul(G.mul(si, h.members()[i]), s));
    Cochain omega(hg, 2, n);
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y) {
        const Element gx = h.members()[x], gy = h.members()[y];
        const Element bx = h.members()[back[x]], by = h.members()[back[y]];
        const Element xy[] = {x, y};
        omega.set(xy, alpha(gx, gy, s) + alpha(s, bx, by) - alpha(gx, s, by));
      }
    // d omega compares alpha|_H with its s-conjugate; fix the sign by checking
    Cochain ah(hg, 3, n), as(hg, 3, n);
    for (std::size_t i = 0; i < ah.size(); ++i) {
      const auto t = ah.tuple(i);
      ah.set_index(i, alpha(h.members()[t[0]], h.members()[t[1]], h.members()[t[2]]));
      as.set_index(i, alpha(h.members()[back[t[0]]], h.members()[back[t[1]]],
                            h.members()[back[t[2]]]));
    }
    const Cochain d = coboundary(omega);
    if (d == as - ah)
      omega = omega.negated();
    else if (d != ah - as)
      throw Error("conjugation correction does not bound alpha - alpha^s");
    Cochain out(hg, 2, label_modulus());
    for (Element x = 0; x < m; ++x)
      for (Element y = 0; y < m; ++y) {
        const Element xy[] = {x, y};
        const Element bxy[] = {back[x], back[y]};
        out.set(xy, theta.at(bxy) + q * omega.at(xy));
      }
    return out;
  }
};

std::size_t find(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

std::vector<ModuleCategoryLabel> labels_for_class(const Cochain& alpha, const SubgroupRef& h,
                                                  Int q) {
  auto witness = label_witness(alpha, h, q);
  if (!witness) return {};
  SubgroupContext ctx(alpha, h, q, std::move(*witness));
  const Int m = ctx.label_modulus();

  // theta-classes by breadth-first search over the cocycle generators
  const auto gens = cocycle_generators(ctx.hg, 2, m);
  std::vector<Cochain> reps{Cochain(ctx.hg, 2, m)};
  std::map<std::vector<Int>, std::size_t> index{{ctx.key(ctx.theta0), 0}};
  for (std::size_t i = 0; i < reps.size(); ++i)
    for (const auto& gen : gens) {
      Cochain next = reps[i] + rebase(ctx.hg, gen);
      auto k = ctx.key(ctx.theta0 + next);
      if (index.emplace(std::move(k), reps.size()).second) reps.push_back(std::move(next));
    }

  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const GroupPtr& g = h.parent();
  const SubgroupRef norm = normalizer(g, h);
  for (Element s : norm.members()) {
    if (h.contains(s)) continue;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto it = index.find(ctx.key(ctx.conjugate(ctx.theta0 + reps[i], s)));
      if (it == index.end()) throw Error("conjugate label outside the enumerated classes");
      const std::size_t a = find(parent, i), b = find(parent, it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<ModuleCategoryLabel> out;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (find(parent, i) == i) out.push_back({h, ctx.theta0 + reps[i]});
  return out;
}

}  // namespace

Int default_lift_factor(const FiniteGroup& g) { return static_cast<Int>(g.order()); }

std::optional<Cochain> label_witness(const Cochain& alpha, const SubgroupRef& h, Int lift_factor) {
  check_alpha(alpha);
  return solve_coboundary(restrict(alpha, h), resolve_lift(alpha, lift_factor));
}

bool obstruction_vanishes(const Cochain& alpha, const SubgroupRef& h, Int lift_factor) {
  return label_witness(alpha, h, lift_factor).has_value();
}

std::string label_problem(const ModuleCategoryLabel& label, const Cochain& alpha) {
  const SubgroupRef& h = label.subgroup;
  const Cochain& theta = label.theta;
  if (h.parent()->table() != alpha.group().table()) return "subgroup of a different group";
  if (theta.degree() != 2) return "theta must have degree 2";
  if (theta.group().table() != h.as_group()->table())
    return "theta is not a cochain on the subgroup";
  if (theta.modulus() % alpha.modulus() != 0)
    return "theta modulus " + std::to_string(theta.modulus()) + " is not a multiple of " +
           std::to_string(alpha.modulus());
  if (!theta.normalized()) return "theta is not normalised";
  const auto want = restrict(Cochain(h.parent(), 3, alpha.modulus(), alpha.entries()), h)
                        .lifted(theta.modulus() / alpha.modulus());
  if (coboundary(theta).entries() != want.entries())
    return "d theta differs from the lifted restriction of alpha";
  return {};
}

std::vector<ModuleCategoryLabel> enumerate_indecomposables(const Cochain& alpha, Int lift_factor,
                                                           Jobs jobs) {
  check_alpha(alpha);
  const Int q = resolve_lift(alpha, lift_factor);
  const GroupPtr& g = alpha.group_ptr();
  if (g->order() > kModcatOrderBound)
    throw UnsupportedError("module category enumeration is limited to |G| <= " +
                           std::to_string(kModcatOrderBound));
  const auto classes = enumerate_subgroups(g);
  auto chunks = map_chunks(classes.size(), jobs, [&](std::size_t b, std::size_t e) {
    std::vector<ModuleCategoryLabel> out;
    for (std::size_t i = b; i < e; ++i) {
      auto labels = labels_for_class(alpha, classes[i].front(), q);
      for (auto& l : labels) out.push_back(std::move(l));
    }
    return out;
  });
  std::vector<ModuleCategoryLabel> all;
  for (auto& ch : chunks)
    for (auto& l : ch) all.push_back(std::move(l));
  return all;
}

InducedDescriptor induce(const ModuleCategoryLabel& label, const Cochain& alpha) {
  if (auto p = label_problem(label, alpha); !p.empty()) throw ValidationError(p);
  return {label, alpha.group().order() / label.subgroup.order()};
}

DecompositionVerdict verify_decomposition(const DecompositionReport& report, const Cochain& alpha,
                                          std::size_t expected_total) {
  DecompositionVerdict v;
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    const auto& e = report.entries[i];
    if (auto p = label_problem(e.label, alpha); !p.empty()) {
      v.problems.push_back("entry " + std::to_string(i) + ": " + p);
      continue;
    }
    v.total += e.multiplicity * (alpha.group().order() / e.label.subgroup.order());
  }
  if (v.total != expected_total)
    v.problems.push_back("total simple count " + std::to_string(v.total) + " != expected " +
                         std::to_string(expected_total));
  v.valid = v.problems.empty();
  return v;
}

}  // namespace gerbal

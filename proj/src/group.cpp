#include "gerbal/group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace gerbal {

namespace {

std::string triple_str(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}

// Bitset over elements; subgroups of groups up to a few hundred elements.
using Mask = std::vector<std::uint64_t>;

bool mask_has(const Mask& m, Element e) {
  return (m[e / 64] >> (e % 64)) & 1U;
}

std::vector<Element> mask_members(std::size_t n, const Mask& m) {
  std::vector<Element> out;
  for (Element e = 0; e < n; ++e)
    if (mask_has(m, e)) out.push_back(e);
  return out;
}

// Closure of `start` together with `gens` under multiplication.
Mask closure(const FiniteGroup& g, Mask start, std::span<const Element> gens) {
  const std::size_t n = g.order();
  start[0] |= 1U;  // identity
  std::vector<Element> queue = mask_members(n, start);
  std::vector<Element> all_gens(gens.begin(), gens.end());
  for (Element e : queue) all_gens.push_back(e);
  std::sort(all_gens.begin(), all_gens.end());
  all_gens.erase(std::unique(all_gens.begin(), all_gens.end()), all_gens.end());
  for (Element e : gens) {
    if (!mask_has(start, e)) {
      start[e / 64] |= std::uint64_t{1} << (e % 64);
      queue.push_back(e);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Element x = queue[qi];
    for (Element s : all_gens) {
      const Element y = g.mul(x, s);
      if (!mask_has(start, y)) {
        start[y / 64] |= std::uint64_t{1} << (y % 64);
        queue.push_back(y);
      }
    }
  }
  return start;
}

GroupPtr make_shared_group(std::string name, std::vector<std::vector<Element>> t) {
  return std::make_shared<const FiniteGroup>(
      FiniteGroup::from_table(std::move(name), std::move(t)));
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::string name,
                                    std::vector<std::vector<Element>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw ValidationError("group table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw ValidationError("ragged table: row " + std::to_string(i) +
                            " has " + std::to_string(table[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw ValidationError("entry out of range at (" + std::to_string(i) +
                              "," + std::to_string(j) + ")");
      }
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g)
      ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == n) throw ValidationError("no identity element");

  for (std::size_t g = 0; g < n; ++g) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h)
      found = table[g][h] == identity && table[h][g] == identity;
    if (!found)
      throw ValidationError("no inverse for element " + std::to_string(g));
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw ValidationError("not associative at " + triple_str(a, b, c));

  // Swap identity into slot 0.
  if (identity != 0) {
    std::vector<Element> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[0], perm[identity]);
    std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        t[perm[a]][perm[b]] = perm[table[a][b]];
    table = std::move(t);
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = n;
  g.mult_.resize(n * n);
  g.inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      g.mult_[a * n + b] = table[a][b];
      if (table[a][b] == 0) g.inv_[a] = static_cast<Element>(b);
    }
  return g;
}

Element FiniteGroup::power(Element a, std::uint64_t k) const noexcept {
  Element r = 0;
  for (std::uint64_t i = 0; i < k % element_order(a); ++i) r = mul(r, a);
  return r;
}

std::size_t FiniteGroup::element_order(Element a) const noexcept {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> t(order_, std::vector<Element>(order_));
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b) t[a][b] = mul(a, b);
  return t;
}

bool FiniteGroup::check_associativity() const noexcept {
  for (Element a = 0; a < order_; ++a)
    for (Element b = 0; b < order_; ++b)
      for (Element c = 0; c < order_; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
  return true;
}

SubgroupRef::SubgroupRef(GroupPtr parent, std::vector<Element> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw ValidationError("subgroup without parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const auto& g = *parent_;
  if (members_.empty() || members_.front() != 0)
    throw ValidationError("subgroup does not contain the identity");
  if (members_.back() >= g.order())
    throw ValidationError("subgroup member out of range");
  for (Element a : members_) {
    if (!contains(g.inv(a)))
      throw ValidationError("subgroup not closed under inverse at " +
                            std::to_string(a));
    for (Element b : members_)
      if (!contains(g.mul(a, b)))
        throw ValidationError("subgroup not closed under product at (" +
                              std::to_string(a) + "," + std::to_string(b) + ")");
  }
}

bool SubgroupRef::contains(Element g) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), g);
}

Element SubgroupRef::local_index(Element g) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), g);
  if (it == members_.end() || *it != g)
    throw ValidationError("element " + std::to_string(g) + " not in subgroup");
  return static_cast<Element>(it - members_.begin());
}

GroupPtr SubgroupRef::as_group() const {
  const std::size_t m = members_.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      t[i][j] = local_index(parent_->mul(members_[i], members_[j]));
  std::ostringstream name;
  name << parent_->name() << "[";
  for (std::size_t i = 0; i < m; ++i) name << (i ? "," : "") << members_[i];
  name << "]";
  return make_shared_group(name.str(), std::move(t));
}

GroupPtr make_cyclic(std::size_t n) {
  if (n == 0) throw ValidationError("cyclic group order must be positive");
  std::vector<std::vector<Element>> t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<Element>((a + b) % n);
  return make_shared_group("cyclic:" + std::to_string(n), std::move(t));
}

GroupPtr make_dihedral(std::size_t n) {
  if (n == 0) throw ValidationError("dihedral parameter must be positive");
  const std::size_t m = 2 * n;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      // element = s^e r^i with e = x / n, i = x % n; r^i s = s r^-i
      const std::size_t ex = x / n, ix = x % n, ey = y / n, iy = y % n;
      const std::size_t i = ((ey ? n - ix % n : ix) + iy) % n;
      t[x][y] = static_cast<Element>(((ex + ey) % 2) * n + i);
    }
  return make_shared_group("dihedral:" + std::to_string(n), std::move(t));
}

GroupPtr make_symmetric(std::size_t n) {
  if (n == 0 || n > 4) throw UnsupportedError("symmetric:n supports 1 <= n <= 4");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<std::size_t>, Element> index;
  for (std::size_t i = 0; i < perms.size(); ++i)
    index[perms[i]] = static_cast<Element>(i);
  const std::size_t m = perms.size();
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t x = 0; x < n; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index.at(c);
    }
  return make_shared_group("symmetric:" + std::to_string(n), std::move(t));
}

GroupPtr make_quaternion8() {
  // Unit quaternions as (sign, axis) with axis 0 = 1, 1 = i, 2 = j, 3 = k.
  static constexpr int kAxisProd[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSignProd[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::vector<Element>> t(8, std::vector<Element>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int sa = a < 4 ? 1 : -1, sb = b < 4 ? 1 : -1;
      const int xa = a % 4, xb = b % 4;
      const int s = sa * sb * kSignProd[xa][xb];
      t[a][b] = static_cast<Element>(kAxisProd[xa][xb] + (s < 0 ? 4 : 0));
    }
  return make_shared_group("quaternion:8", std::move(t));
}

GroupPtr make_direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), m = na * nb;
  std::vector<std::vector<Element>> t(m, std::vector<Element>(m));
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      t[x][y] = static_cast<Element>(
          a.mul(static_cast<Element>(x / nb), static_cast<Element>(y / nb)) * nb +
          b.mul(static_cast<Element>(x % nb), static_cast<Element>(y % nb)));
  return make_shared_group("product:(" + a.name() + "," + b.name() + ")",
                           std::move(t));
}

GroupPtr parse_group_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw ValidationError("group spec missing ':' in \"" + spec + "\"");
  const std::string tag = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  auto parse_size = [&]() -> std::size_t {
    if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
      throw ValidationError("bad numeric argument in group spec \"" + spec + "\"");
    return std::stoul(arg);
  };
  if (tag == "cyclic") return make_cyclic(parse_size());
  if (tag == "dihedral") return make_dihedral(parse_size());
  if (tag == "symmetric") return make_symmetric(parse_size());
  if (tag == "quaternion") {
    if (parse_size() != 8) throw UnsupportedError("only quaternion:8 is supported");
    return make_quaternion8();
  }
  if (tag == "product") {
    if (arg.size() < 2 || arg.front() != '(' || arg.back() != ')')
      throw ValidationError("product spec must look like product:(A,B)");
    const std::string inner = arg.substr(1, arg.size() - 2);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        auto a = parse_group_spec(inner.substr(0, i));
        auto b = parse_group_spec(inner.substr(i + 1));
        return make_direct_product(*a, *b);
      }
    }
    throw ValidationError("product spec needs two factors: \"" + spec + "\"");
  }
  throw ValidationError("unknown group constructor \"" + tag + "\"");
}

std::vector<Element> center(const FiniteGroup& g) {
  std::vector<Element> out;
  for (Element a = 0; a < g.order(); ++a) {
    bool central = true;
    for (Element b = 0; b < g.order() && central; ++b)
      central = g.mul(a, b) == g.mul(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<Element> conjugacy_class(const FiniteGroup& g, Element a) {
  std::set<Element> cls;
  for (Element s = 0; s < g.order(); ++s) cls.insert(g.conj(s, a));
  return {cls.begin(), cls.end()};
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<std::vector<Element>> out;
  std::vector<bool> seen(g.order(), false);
  for (Element a = 0; a < g.order(); ++a) {
    if (seen[a]) continue;
    auto cls = conjugacy_class(g, a);
    for (Element x : cls) seen[x] = true;
    out.push_back(std::move(cls));
  }
  return out;
}

SubgroupRef centralizer(const GroupPtr& g, Element a) {
  if (a >= g->order())
    throw ValidationError("element " + std::to_string(a) + " out of range");
  std::vector<Element> members;
  for (Element h = 0; h < g->order(); ++h)
    if (g->mul(h, a) == g->mul(a, h)) members.push_back(h);
  return SubgroupRef(g, std::move(members));
}

SubgroupRef conjugate_subgroup(const SubgroupRef& h, Element s) {
  std::vector<Element> members;
  members.reserve(h.order());
  for (Element x : h.members()) members.push_back(h.parent()->conj(s, x));
  return SubgroupRef(h.parent(), std::move(members));
}

SubgroupRef normalizer(const GroupPtr& g, const SubgroupRef& h) {
  std::vector<Element> members;
  for (Element s = 0; s < g->order(); ++s) {
    bool ok = true;
    for (Element x : h.members())
      if (!h.contains(g->conj(s, x))) {
        ok = false;
        break;
      }
    if (ok) members.push_back(s);
  }
  return SubgroupRef(g, std::move(members));
}

SubgroupRef generated_subgroup(const GroupPtr& g, std::span<const Element> gens) {
  for (Element e : gens)
    if (e >= g->order())
      throw ValidationError("generator " + std::to_string(e) + " out of range");
  Mask m = closure(*g, Mask((g->order() + 63) / 64, 0), gens);
  return SubgroupRef(g, mask_members(g->order(), m));
}

SubgroupRef trivial_subgroup(const GroupPtr& g) { return SubgroupRef(g, {0}); }

SubgroupRef whole_group(const GroupPtr& g) {
  std::vector<Element> all(g->order());
  std::iota(all.begin(), all.end(), 0);
  return SubgroupRef(g, std::move(all));
}

std::vector<std::vector<SubgroupRef>> enumerate_subgroups(const GroupPtr& gp,
                                                          std::size_t order_bound) {
  const FiniteGroup& g = *gp;
  const std::size_t n = g.order();
  if (n > order_bound)
    throw UnsupportedError("subgroup enumeration refused: order " +
                           std::to_string(n) + " exceeds bound " +
                           std::to_string(order_bound));

  std::set<Mask> found;
  std::vector<Mask> work;
  auto add = [&](Mask m) {
    if (found.insert(m).second) work.push_back(std::move(m));
  };

  const Mask empty((n + 63) / 64, 0);
  std::vector<Mask> cyclics;
  {
    std::set<Mask> cyc;
    for (Element a = 0; a < n; ++a) {
      const Element gens[] = {a};
      cyc.insert(closure(g, empty, gens));
    }
    cyclics.assign(cyc.begin(), cyc.end());
  }
  // Every subgroup is a join of cyclic subgroups, so joining each discovered
  // subgroup with every cyclic one reaches all of them.
  for (const auto& c : cyclics) add(c);
  for (std::size_t i = 0; i < work.size(); ++i) {
    const Mask current = work[i];
    for (const auto& c : cyclics) {
      bool inside = true;
      for (std::size_t w = 0; w < c.size(); ++w)
        if ((c[w] & ~current[w]) != 0) inside = false;
      if (inside) continue;
      const auto gens = mask_members(n, c);
      add(closure(g, current, gens));
    }
  }

  std::vector<std::vector<Element>> subs;
  for (const auto& m : found) subs.push_back(mask_members(n, m));
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::map<std::vector<Element>, std::size_t> position;
  for (std::size_t i = 0; i < subs.size(); ++i) position[subs[i]] = i;
  std::vector<bool> assigned(subs.size(), false);
  std::vector<std::vector<SubgroupRef>> classes;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (assigned[i]) continue;
    std::set<std::size_t> orbit;
    for (Element s = 0; s < n; ++s) {
      std::vector<Element> conj;
      for (Element x : subs[i]) conj.push_back(g.conj(s, x));
      std::sort(conj.begin(), conj.end());
      orbit.insert(position.at(conj));
    }
    std::vector<SubgroupRef> cls;
    for (std::size_t j : orbit) {
      assigned[j] = true;
      cls.emplace_back(gp, subs[j]);
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Element> coset_representatives(const SubgroupRef& h) {
  const FiniteGroup& g = *h.parent();
  std::vector<bool> covered(g.order(), false);
  std::vector<Element> reps;
  for (Element r = 0; r < g.order(); ++r) {
    if (covered[r]) continue;
    reps.push_back(r);
    for (Element x : h.members()) covered[g.mul(r, x)] = true;
  }
  return reps;
}

}  // namespace gerbal

#include "gerbal/cochain.hpp"

#include <random>
#include <string>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void decode(std::size_t idx, std::size_t n, std::span<Element> out) {
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = static_cast<Element>(idx % n);
    idx /= n;
  }
}

std::size_t encode(std::span<const Element> t, std::size_t n) {
  std::size_t idx = 0;
  for (Element e : t) idx = idx * n + e;
  return idx;
}

// Value of (d c) at the (k+1)-tuple t, with an optional action on the first
// face.
Int coboundary_at(const Cochain& c, std::span<const Element> t, const Int* action) {
  const FiniteGroup& g = c.group();
  const std::size_t n = g.order();
  const int k = c.degree();
  const Int m = c.modulus();
  Element face[kMaxDegree];
  std::span<const Element> f(face, static_cast<std::size_t>(k));

  Int acc = 0;
  // i = 0: drop g1
  for (int j = 0; j < k; ++j) face[j] = t[j + 1];
  Int first = c.at_index(encode(f, n));
  if (action) first = mod(first * action[t[0]], m);
  acc += first;
  for (int i = 1; i <= k; ++i) {
    int w = 0;
    for (int j = 0; j < k + 1; ++j) {
      if (j == i - 1) {
        face[w++] = g.mul(t[j], t[j + 1]);
        ++j;
      } else {
        face[w++] = t[j];
      }
    }
    const Int v = c.at_index(encode(f, n));
    acc += (i % 2 == 0) ? v : -v;
  }
  for (int j = 0; j < k; ++j) face[j] = t[j];
  const Int last = c.at_index(encode(f, n));
  acc += ((k + 1) % 2 == 0) ? last : -last;
  return mod(acc, m);
}

Cochain coboundary_impl(const Cochain& c, const Int* action, Jobs jobs) {
  if (c.degree() < 0 || c.degree() >= kMaxDegree)
    throw UnsupportedError("coboundary of a degree-" + std::to_string(c.degree()) +
                           " cochain is not supported");
  const std::size_t n = c.group().order();
  const int k1 = c.degree() + 1;
  const std::size_t total = ipow(n, k1);
  std::vector<Int> out(total, 0);
  map_chunks(total, jobs, [&](std::size_t b, std::size_t e) {
    Element t[kMaxDegree + 1];
    std::span<Element> ts(t, static_cast<std::size_t>(k1));
    for (std::size_t i = b; i < e; ++i) {
      decode(i, n, ts);
      out[i] = coboundary_at(c, ts, action);
    }
    return 0;
  });
  return Cochain(c.group_ptr(), k1, c.modulus(), std::move(out));
}

}  // namespace

Cochain::Cochain(GroupPtr group, int degree, Int modulus)
    : group_(std::move(group)), degree_(degree), modulus_(modulus) {
  if (!group_) throw ValidationError("cochain without group");
  if (degree_ < 0 || degree_ > kMaxDegree)
    throw UnsupportedError("cochain degree must be in 0..4");
  if (modulus_ < 1) throw ValidationError("cochain modulus must be positive");
  entries_.assign(ipow(group_->order(), degree_), 0);
}

Cochain::Cochain(GroupPtr group, int degree, Int modulus, std::vector<Int> entries)
    : Cochain(std::move(group), degree, modulus) {
  if (entries.size() != entries_.size())
    throw ValidationError("cochain table has " + std::to_string(entries.size()) +
                          " entries, expected " + std::to_string(entries_.size()));
  for (Int e : entries)
    if (e < 0 || e >= modulus_)
      throw ValidationError("cochain entry " + std::to_string(e) +
                            " outside [0, " + std::to_string(modulus_) + ")");
  entries_ = std::move(entries);
}

std::size_t Cochain::index(std::span<const Element> args) const {
  if (args.size() != static_cast<std::size_t>(degree_))
    throw ValidationError("expected " + std::to_string(degree_) + " arguments, got " +
                          std::to_string(args.size()));
  for (Element e : args)
    if (e >= group_->order())
      throw ValidationError("element " + std::to_string(e) + " out of range");
  return encode(args, group_->order());
}

std::vector<Element> Cochain::tuple(std::size_t idx) const {
  std::vector<Element> t(static_cast<std::size_t>(degree_));
  decode(idx, group_->order(), t);
  return t;
}

Int Cochain::at(std::span<const Element> args) const { return entries_[index(args)]; }

void Cochain::set(std::span<const Element> args, Int value) {
  entries_[index(args)] = gerbal::mod(value, modulus_);
}

bool Cochain::normalized() const noexcept {
  const std::size_t n = group_->order();
  std::vector<Element> t(static_cast<std::size_t>(degree_));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] == 0) continue;
    decode(i, n, t);
    for (Element e : t)
      if (e == 0) return false;
  }
  return true;
}

bool Cochain::is_zero() const noexcept {
  for (Int e : entries_)
    if (e != 0) return false;
  return true;
}

Cochain Cochain::lifted(Int q) const {
  if (q < 1) throw ValidationError("lift factor must be positive");
  std::vector<Int> e(entries_);
  for (Int& x : e) x *= q;
  return Cochain(group_, degree_, modulus_ * q, std::move(e));
}

Cochain Cochain::negated() const {
  std::vector<Int> e(entries_);
  for (Int& x : e) x = gerbal::mod(-x, modulus_);
  return Cochain(group_, degree_, modulus_, std::move(e));
}

namespace {
Cochain combine(const Cochain& a, const Cochain& b, Int sign) {
  if (a.group_ptr() != b.group_ptr() || a.degree() != b.degree() ||
      a.modulus() != b.modulus())
    throw ValidationError("cochain arithmetic needs equal group, degree and modulus");
  std::vector<Int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    e[i] = mod(a.at_index(i) + sign * b.at_index(i), a.modulus());
  return Cochain(a.group_ptr(), a.degree(), a.modulus(), std::move(e));
}
}  // namespace

Cochain operator+(const Cochain& a, const Cochain& b) { return combine(a, b, 1); }
Cochain operator-(const Cochain& a, const Cochain& b) { return combine(a, b, -1); }

Cochain coboundary(const Cochain& c, Jobs jobs) { return coboundary_impl(c, nullptr, jobs); }

Cochain twisted_coboundary(const Cochain& c, std::span<const Int> action) {
  if (action.size() != c.group().order())
    throw ValidationError("action table size does not match group order");
  return coboundary_impl(c, action.data(), {});
}

CocycleVerdict is_cocycle(const Cochain& c, Jobs jobs) {
  if (c.degree() < 1 || c.degree() > 3)
    throw UnsupportedError("is_cocycle supports degrees 1..3, got " +
                           std::to_string(c.degree()));
  const std::size_t n = c.group().order();
  const int k1 = c.degree() + 1;
  const std::size_t total = ipow(n, k1);
  auto firsts = map_chunks(total, jobs, [&](std::size_t b, std::size_t e) {
    Element t[kMaxDegree + 1];
    std::span<Element> ts(t, static_cast<std::size_t>(k1));
    for (std::size_t i = b; i < e; ++i) {
      decode(i, n, ts);
      if (coboundary_at(c, ts, nullptr) != 0) return std::optional<std::size_t>(i);
    }
    return std::optional<std::size_t>();
  });
  CocycleVerdict v;
  v.checked = total;
  for (const auto& f : firsts) {
    if (!f) continue;
    v.cocycle = false;
    std::vector<Element> w(static_cast<std::size_t>(k1));
    decode(*f, n, w);
    v.witness = std::move(w);
    break;
  }
  return v;
}

Cochain restrict(const Cochain& c, const SubgroupRef& h) {
  if (h.parent() != c.group_ptr())
    throw ValidationError("restrict: subgroup belongs to a different group");
  GroupPtr sub = h.as_group();
  Cochain out(sub, c.degree(), c.modulus());
  const std::size_t m = h.order();
  std::vector<Element> local(static_cast<std::size_t>(c.degree()));
  std::vector<Element> global(local.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    decode(i, m, local);
    for (std::size_t j = 0; j < local.size(); ++j) global[j] = h.members()[local[j]];
    out.set_index(i, c.at(global));
  }
  return out;
}

void check_homomorphism(const FiniteGroup& source, const FiniteGroup& target,
                        std::span<const Element> phi) {
  if (phi.size() != source.order())
    throw ValidationError("homomorphism table has wrong length");
  for (Element x : phi)
    if (x >= target.order()) throw ValidationError("homomorphism image out of range");
  for (Element a = 0; a < source.order(); ++a)
    for (Element b = 0; b < source.order(); ++b)
      if (phi[source.mul(a, b)] != target.mul(phi[a], phi[b]))
        throw ValidationError("map is not a homomorphism at (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
}

Cochain inflate(const Cochain& c, GroupPtr source, std::span<const Element> phi) {
  check_homomorphism(*source, c.group(), phi);
  Cochain out(source, c.degree(), c.modulus());
  const std::size_t n = source->order();
  std::vector<Element> t(static_cast<std::size_t>(c.degree()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    decode(i, n, t);
    for (Element& x : t) x = phi[x];
    out.set_index(i, c.at(t));
  }
  return out;
}

Cochain external_product(const Cochain& a, const Cochain& b, GroupPtr product) {
  if (a.degree() != b.degree())
    throw ValidationError("external product needs equal degrees");
  const std::size_t na = a.group().order(), nb = b.group().order();
  if (product->order() != na * nb)
    throw ValidationError("external product: group order mismatch");
  const Int m = lcm(a.modulus(), b.modulus());
  const Int qa = m / a.modulus(), qb = m / b.modulus();
  Cochain out(product, a.degree(), m);
  const std::size_t k = static_cast<std::size_t>(a.degree());
  std::vector<Element> t(k), ta(k), tb(k);
  for (std::size_t i = 0; i < out.size(); ++i) {
    decode(i, na * nb, t);
    for (std::size_t j = 0; j < k; ++j) {
      ta[j] = static_cast<Element>(t[j] / nb);
      tb[j] = static_cast<Element>(t[j] % nb);
    }
    out.set_index(i, qa * a.at(ta) + qb * b.at(tb));
  }
  return out;
}

Cochain standard_cyclic_3cocycle(GroupPtr cyclic, Int k) {
  const std::size_t n = cyclic->order();
  Cochain out(cyclic, 3, static_cast<Int>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Int carry = static_cast<Int>((b + c) / n);
        const Element t[] = {static_cast<Element>(a), static_cast<Element>(b),
                             static_cast<Element>(c)};
        out.set(t, k * static_cast<Int>(a) * carry);
      }
  return out;
}

Cochain standard_cyclic_3cocycle(std::size_t n, Int k) {
  return standard_cyclic_3cocycle(make_cyclic(n), k);
}

Cochain random_cochain(GroupPtr group, int degree, Int modulus, std::uint64_t seed) {
  Cochain out(group, degree, modulus);
  std::mt19937_64 rng(seed);
  const std::size_t n = group->order();
  std::vector<Element> t(static_cast<std::size_t>(degree));
  for (std::size_t i = 0; i < out.size(); ++i) {
    decode(i, n, t);
    bool has_identity = false;
    for (Element e : t) has_identity = has_identity || e == 0;
    // Draw unconditionally so the stream does not depend on the layout.
    const Int v = static_cast<Int>(rng() % static_cast<std::uint64_t>(modulus));
    out.set_index(i, has_identity ? 0 : v);
  }
  return out;
}

}  // namespace gerbal

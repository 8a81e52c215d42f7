#include "gerbal/algebra.hpp"

#include <algorithm>
#include <numbers>

#include "gerbal/error.hpp"

namespace gerbal {

StructureConstants::StructureConstants(std::vector<std::vector<Element>> labels, Int modulus,
                                       std::vector<std::optional<ProductEntry>> products,
                                       std::vector<std::size_t> unit)
    : labels_(std::move(labels)),
      modulus_(modulus),
      products_(std::move(products)),
      unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (modulus_ < 1) throw ValidationError("modulus must be positive");
  if (products_.size() != d * d)
    throw ValidationError("product table must have dim^2 = " + std::to_string(d * d) +
                          " entries");
  for (auto& p : products_)
    if (p) {
      if (p->k >= d) throw ValidationError("product entry names basis element out of range");
      p->e = mod(p->e, modulus_);
    }
  std::sort(unit_.begin(), unit_.end());
  if (std::adjacent_find(unit_.begin(), unit_.end()) != unit_.end())
    throw ValidationError("unit lists a basis element twice");
  for (std::size_t u : unit_)
    if (u >= d) throw ValidationError("unit names basis element out of range");
}

std::size_t StructureConstants::index_of(const std::vector<Element>& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("unknown basis label");
  return static_cast<std::size_t>(it - labels_.begin());
}

StructureConstants group_algebra_table(const Cochain& theta) {
  if (theta.degree() != 2) throw ValidationError("twisted group algebra needs a 2-cochain");
  const FiniteGroup& G = theta.group();
  const std::size_t n = G.order();
  std::vector<std::vector<Element>> labels(n);
  for (Element g = 0; g < n; ++g) labels[g] = {g};
  std::vector<std::optional<ProductEntry>> products(n * n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) products[g * n + h] = ProductEntry{G.mul(g, h), theta(g, h)};
  return StructureConstants(std::move(labels), theta.modulus(), std::move(products), {0});
}

StructureConstants twisted_groupoid_algebra(const GroupoidCochain2& psi) {
  const FiniteGroup& G = psi.group();
  const std::size_t n = G.order();
  const std::size_t d = n * n;
  std::vector<std::vector<Element>> labels(d);
  for (std::size_t i = 0; i < d; ++i)
    labels[i] = {static_cast<Element>(i / n), static_cast<Element>(i % n)};
  std::vector<std::optional<ProductEntry>> products(d * d);
  // (h, t) * (g, s) = (h, t) o (g, s) when h = s g s^-1
  for (Element g = 0; g < n; ++g)
    for (Element s = 0; s < n; ++s) {
      const Element h = G.conj(s, g);
      for (Element t = 0; t < n; ++t) {
        const std::size_t left = h * n + t, right = g * n + s;
        products[left * d + right] = ProductEntry{g * n + G.mul(t, s), psi(g, s, t)};
      }
    }
  std::vector<std::size_t> unit(n);
  for (Element g = 0; g < n; ++g) unit[g] = g * n;
  return StructureConstants(std::move(labels), psi.modulus(), std::move(products),
                            std::move(unit));
}

StructureConstants twisted_group_algebra(const Cochain& theta, Jobs jobs) {
  if (theta.degree() != 2) throw ValidationError("twisted group algebra needs a 2-cochain");
  if (!theta.normalized()) throw ValidationError("theta must be normalised");
  if (auto v = is_cocycle(theta, jobs); !v.cocycle)
    throw ValidationError("theta is not a 2-cocycle; the algebra would not be associative");
  auto s = group_algebra_table(theta);
  if (!check_associativity(s, jobs).associative || !check_unit(s))
    throw Error("twisted group algebra of a cocycle is not associative (bug)");
  return s;
}

StructureConstants twisted_drinfeld_double(const Cochain& alpha, Jobs jobs) {
  auto s = twisted_groupoid_algebra(transgress3(alpha, jobs));
  if (!check_associativity(s, jobs).associative || !check_unit(s))
    throw Error("twisted Drinfeld double is not associative (bug)");
  return s;
}

AssociativityVerdict check_associativity(const StructureConstants& s, Jobs jobs) {
  const std::size_t d = s.dim();
  const Int n = s.modulus();
  // (b_i b_j) b_k against b_i (b_j b_k); nullopt is zero
  auto triple = [&](std::size_t i, std::size_t j, std::size_t k) {
    std::optional<ProductEntry> left, right;
    if (const auto& ij = s.product(i, j))
      if (const auto& r = s.product(ij->k, k)) left = ProductEntry{r->k, mod(ij->e + r->e, n)};
    if (const auto& jk = s.product(j, k))
      if (const auto& r = s.product(i, jk->k)) right = ProductEntry{r->k, mod(jk->e + r->e, n)};
    return left == right;
  };
  auto firsts = map_chunks(d, jobs, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!triple(i, j, k)) return std::optional<std::vector<std::size_t>>({i, j, k});
    return std::optional<std::vector<std::size_t>>();
  });
  AssociativityVerdict v;
  v.checked = static_cast<std::uint64_t>(d) * d * d;
  for (auto& f : firsts)
    if (f) {
      v.associative = false;
      v.witness = std::move(f);
      break;
    }
  return v;
}

bool check_unit(const StructureConstants& s) {
  for (std::size_t b = 0; b < s.dim(); ++b) {
    int left = 0, right = 0;
    for (std::size_t u : s.unit()) {
      if (const auto& p = s.product(u, b)) {
        if (p->k != b || p->e != 0) return false;
        ++left;
      }
      if (const auto& p = s.product(b, u)) {
        if (p->k != b || p->e != 0) return false;
        ++right;
      }
    }
    if (left != 1 || right != 1) return false;
  }
  return true;
}

ExactElement basis_element(const StructureConstants& s, std::size_t i) {
  if (i >= s.dim()) throw ValidationError("basis index out of range");
  ExactElement x;
  x.coefficients.emplace(i, Cyclotomic::integer(s.modulus(), 1));
  return x;
}

ExactElement unit_element(const StructureConstants& s) {
  ExactElement x;
  for (std::size_t u : s.unit()) x.coefficients.emplace(u, Cyclotomic::integer(s.modulus(), 1));
  return x;
}

namespace {

template <class Scalar, class Zeta, class IsZero>
AlgebraElement<Scalar> multiply_impl(const StructureConstants& s, const AlgebraElement<Scalar>& x,
                                     const AlgebraElement<Scalar>& y, Zeta zeta,
                                     IsZero is_zero) {
  for (const auto* z : {&x, &y})
    for (const auto& [i, c] : z->coefficients)
      if (i >= s.dim())
        throw ValidationError("basis index " + std::to_string(i) + " is not in the algebra");
  std::map<std::size_t, Scalar> acc;
  for (const auto& [i, a] : x.coefficients)
    for (const auto& [j, b] : y.coefficients)
      if (const auto& p = s.product(i, j)) {
        Scalar term = a * b * zeta(p->e);
        auto it = acc.find(p->k);
        if (it == acc.end())
          acc.emplace(p->k, term);
        else
          it->second = it->second + term;
      }
  AlgebraElement<Scalar> r;
  for (auto& [k, c] : acc)
    if (!is_zero(c)) r.coefficients.emplace(k, c);
  return r;
}

Int embedding_step(const StructureConstants& s, const ModularEmbedding& emb) {
  if (emb.n % s.modulus() != 0)
    throw ValidationError("modular embedding of order " + std::to_string(emb.n) +
                          " does not contain the N-th roots of unity, N = " +
                          std::to_string(s.modulus()));
  return emb.n / s.modulus();
}

}  // namespace

ExactElement multiply(const StructureConstants& s, const ExactElement& x, const ExactElement& y,
                      const ExactEmbedding&) {
  const Int n = s.modulus();
  return multiply_impl<Cyclotomic>(
      s, x, y, [n](Int e) { return Cyclotomic::root(n, e); },
      [](const Cyclotomic& c) { return c.is_zero(); });
}

ModularElement multiply(const StructureConstants& s, const ModularElement& x,
                        const ModularElement& y, const ModularEmbedding& emb) {
  const Int step = embedding_step(s, emb);
  const Int p = emb.p;
  for (const auto* z : {&x, &y})
    for (const auto& [i, c] : z->coefficients)
      if (i >= s.dim())
        throw ValidationError("basis index " + std::to_string(i) + " is not in the algebra");
  ModularElement xr, yr, out;
  for (const auto& [i, c] : x.coefficients) xr.coefficients.emplace(i, mod(c, p));
  for (const auto& [i, c] : y.coefficients) yr.coefficients.emplace(i, mod(c, p));
  std::map<std::size_t, Int> acc;
  for (const auto& [i, a] : xr.coefficients)
    for (const auto& [j, b] : yr.coefficients)
      if (const auto& pe = s.product(i, j)) {
        const Int term = a * b % p * emb.zeta(pe->e * step) % p;
        acc[pe->k] = (acc[pe->k] + term) % p;
      }
  for (auto& [k, c] : acc)
    if (c != 0) out.coefficients.emplace(k, c);
  return out;
}

FloatElement multiply(const StructureConstants& s, const FloatElement& x, const FloatElement& y,
                      const FloatEmbedding& emb) {
  const double n = static_cast<double>(s.modulus());
  return multiply_impl<std::complex<double>>(
      s, x, y,
      [n](Int e) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / n); },
      [&](const std::complex<double>& c) { return std::abs(c) < emb.tolerance; });
}

ModularElement to_modular(const ExactElement& x, const ModularEmbedding& emb) {
  ModularElement r;
  for (const auto& [i, c] : x.coefficients)
    if (Int v = emb.embed(c); v != 0) r.coefficients.emplace(i, v);
  return r;
}

FloatElement to_float(const ExactElement& x, const FloatEmbedding& emb) {
  FloatElement r;
  for (const auto& [i, c] : x.coefficients) {
    auto v = c.to_complex();
    if (std::abs(v) >= emb.tolerance) r.coefficients.emplace(i, v);
  }
  return r;
}

std::size_t center_dimension(const StructureConstants& s, const ModularEmbedding& emb) {
  const Int step = embedding_step(s, emb);
  const Int p = emb.p;
  const std::size_t d = s.dim();
  if (!is_prime(p) || (p - 1) % emb.n != 0)
    throw ValidationError("prime " + std::to_string(p) + " is not 1 mod " +
                          std::to_string(emb.n));
  if (p <= static_cast<Int>(d) * s.modulus())
    throw ValidationError("prime " + std::to_string(p) + " is too small: need p > dim * N = " +
                          std::to_string(static_cast<Int>(d) * s.modulus()));
  std::vector<Int> zeta(static_cast<std::size_t>(s.modulus()));
  for (Int e = 0; e < s.modulus(); ++e) zeta[static_cast<std::size_t>(e)] = emb.zeta(e * step);

  // Reduced row echelon basis of the commutator equations in the unknowns x_i.
  std::vector<std::vector<Int>> pivot_rows;
  std::vector<std::ptrdiff_t> pivot_of(d, -1);  // column -> row in pivot_rows
  std::vector<Int> row(d);
  std::map<std::size_t, std::vector<std::pair<std::size_t, Int>>> eqs;
  for (std::size_t j = 0; j < d && pivot_rows.size() < d; ++j) {
    // coefficient of b_k in x b_j - b_j x
    eqs.clear();
    for (std::size_t i = 0; i < d; ++i) {
      if (const auto& a = s.product(i, j))
        eqs[a->k].emplace_back(i, zeta[static_cast<std::size_t>(a->e)]);
      if (const auto& b = s.product(j, i))
        eqs[b->k].emplace_back(i, p - zeta[static_cast<std::size_t>(b->e)]);
    }
    for (const auto& [k, terms] : eqs) {
      std::fill(row.begin(), row.end(), 0);
      for (const auto& [i, v] : terms) row[i] = (row[i] + v) % p;
      for (const auto& [i, v] : terms) {
        (void)v;
        const Int c = row[i];
        if (c == 0 || pivot_of[i] < 0) continue;
        const auto& pr = pivot_rows[static_cast<std::size_t>(pivot_of[i])];
        for (std::size_t col = 0; col < d; ++col)
          if (pr[col] != 0) row[col] = mod(row[col] - c * pr[col], p);
      }
      std::size_t lead = d;
      for (std::size_t col = 0; col < d; ++col)
        if (row[col] != 0) {
          lead = col;
          break;
        }
      if (lead == d) continue;
      const Int inv = inverse_mod(row[lead], p);
      for (Int& v : row) v = v * inv % p;
      for (auto& pr : pivot_rows) {
        const Int c = pr[lead];
        if (c == 0) continue;
        for (std::size_t col = 0; col < d; ++col)
          if (row[col] != 0) pr[col] = mod(pr[col] - c * row[col], p);
      }
      pivot_of[lead] = static_cast<std::ptrdiff_t>(pivot_rows.size());
      pivot_rows.push_back(row);
    }
  }
  return d - pivot_rows.size();
}

CenterReport center_dimension_multi(const StructureConstants& s, std::vector<Int> primes) {
  if (primes.empty()) primes = admissible_primes(s.modulus(), 3);
  CenterReport r;
  for (Int p : primes) {
    const std::size_t dim = center_dimension(s, make_modular_embedding(s.modulus(), p));
    r.per_prime.emplace_back(p, dim);
  }
  r.dimension = r.per_prime.front().second;
  for (const auto& [p, dim] : r.per_prime) {
    if (dim != r.dimension) r.consistent = false;
    r.dimension = std::min(r.dimension, dim);
  }
  return r;
}

}  // namespace gerbal

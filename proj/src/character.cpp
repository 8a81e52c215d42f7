#include "gerbal/character.hpp"

#include <cmath>
#include <numbers>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

constexpr std::size_t kCap = 10;

// Scalar helpers shared by the exact and float paths.
struct ExactOps {
  Int n;
  Cyclotomic zero() const { return Cyclotomic::integer(n, 0); }
  Cyclotomic one() const { return Cyclotomic::integer(n, 1); }
  Cyclotomic root(Int m, Int e) const { return Cyclotomic::root(m, e); }
  bool equal(const Cyclotomic& a, const Cyclotomic& b) const { return a == b; }
  bool is_zero(const Cyclotomic& a) const { return a.is_zero(); }
};

struct FloatOps {
  double tol;
  std::complex<double> zero() const { return 0; }
  std::complex<double> one() const { return 1; }
  std::complex<double> root(Int m, Int e) const {
    return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(mod(e, m)) /
                               static_cast<double>(m));
  }
  bool equal(std::complex<double> a, std::complex<double> b) const {
    return std::abs(a - b) < tol;
  }
  bool is_zero(std::complex<double> a) const { return std::abs(a) < tol; }
};

template <class T, class Ops>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b, const Ops& ops) {
  Matrix<T> c(a.rows, b.cols, ops.zero());
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (ops.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    }
  return c;
}

template <class T, class Ops>
bool matrix_equal(const Matrix<T>& a, const Matrix<T>& b, const T& scale, const Ops& ops) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    if (!ops.equal(a.data[i], scale * b.data[i])) return false;
  return true;
}

template <class T, class Ops>
bool is_identity(const Matrix<T>& m, const Ops& ops) {
  if (m.rows != m.cols) return false;
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j)
      if (!ops.equal(m(i, j), i == j ? ops.one() : ops.zero())) return false;
  return true;
}

template <class T, class Ops>
bool is_zero_matrix(const Matrix<T>& m, const Ops& ops) {
  for (const auto& x : m.data)
    if (!ops.is_zero(x)) return false;
  return true;
}

// Rank of a matrix over F_p.
std::size_t rank_mod(std::vector<Int> a, std::size_t rows, std::size_t cols, Int p) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(a[piv * cols + j], a[rank * cols + j]);
    const Int inv = inverse_mod(a[rank * cols + c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Int f = a[r * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[r * cols + j] = mod(a[r * cols + j] - f * a[rank * cols + j], p);
    }
    ++rank;
  }
  return rank;
}

// Exact matrices are invertible iff the determinant is nonzero; a nonzero
// residue modulo either prime is a proof, two zero residues are taken as
// singular.
struct ExactInvertibility {
  std::vector<ModularEmbedding> embeddings;
  explicit ExactInvertibility(const std::vector<ExactMatrix>& beta) {
    Int order = 1;
    for (const auto& m : beta)
      for (const auto& x : m.data) order = lcm(order, x.order());
    for (Int p : admissible_primes(order, 2)) embeddings.push_back(make_modular_embedding(order, p));
  }
  bool operator()(const ExactMatrix& m) const {
    if (m.rows != m.cols) return false;
    for (const auto& emb : embeddings) {
      std::vector<Int> a(m.data.size());
      for (std::size_t i = 0; i < a.size(); ++i) a[i] = emb.embed(m.data[i]);
      if (rank_mod(a, m.rows, m.cols, emb.p) == m.rows) return true;
    }
    return false;
  }
};

bool float_invertible(const FloatMatrix& m, double tol) {
  if (m.rows != m.cols) return false;
  FloatMatrix a = m;
  const std::size_t n = a.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (std::abs(a(piv, c)) < tol) return false;
    for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
    for (std::size_t r = c + 1; r < n; ++r) {
      const auto f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return true;
}

void check_shapes(const CategoricalCharacter& c) {
  if (!c.group) throw ValidationError("character without group");
  const FiniteGroup& G = *c.group;
  const std::size_t n = G.order();
  if (c.modulus < 1) throw ValidationError("modulus must be positive");
  if (c.dims.size() != n) throw ValidationError("dims must list one dimension per element");
  std::visit(
      [&](const auto& beta) {
        if (beta.size() != n * n) throw ValidationError("beta must have |G|^2 matrices");
        for (Element g = 0; g < n; ++g)
          for (Element h = 0; h < n; ++h) {
            const auto& m = beta[g * n + h];
            if (m.rows != c.dims[G.conj(h, g)] || m.cols != c.dims[g] ||
                m.data.size() != m.rows * m.cols)
              throw ValidationError("beta(" + std::to_string(g) + "," + std::to_string(h) +
                                    ") must be dims(hgh^-1) x dims(g)");
          }
      },
      c.beta);
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return &a == &b || a.table() == b.table();
}

template <class T, class Ops, class Invertible>
CharacterReport verify_impl(const CategoricalCharacter& c, const std::vector<Matrix<T>>& beta,
                            const Cochain& alpha, const Ops& ops, const Invertible& invertible,
                            Jobs jobs) {
  const FiniteGroup& G = *c.group;
  const std::size_t n = G.order();
  const Int m = alpha.modulus();
  CharacterReport r;
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h)
      if (c.dims[g] != c.dims[G.conj(h, g)]) {
        r.problems.push_back("dims is not a class function at " + std::to_string(g));
        g = static_cast<Element>(n);
        break;
      }
  for (Element g = 0; g < n; ++g)
    if (!is_identity(beta[g * n], ops)) {
      r.problems.push_back("beta(" + std::to_string(g) + ",1) is not the identity");
      break;
    }
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (!invertible(beta[i])) {
      r.problems.push_back("beta(" + std::to_string(i / n) + "," + std::to_string(i % n) +
                           ") is not invertible");
      break;
    }

  auto chunks = map_chunks(n, jobs, [&](std::size_t b, std::size_t e) {
    std::vector<std::vector<Element>> bad;
    for (Element rr = static_cast<Element>(b); rr < e; ++rr)
      for (Element g = 0; g < n; ++g) {
        const Element grg = G.conj(g, rr);
        for (Element h = 0; h < n; ++h) {
          if (bad.size() >= kCap) return bad;
          const Element hg = G.mul(h, g);
          const Int s = alpha(h, grg, g) - alpha(G.conj(h, grg), h, g) - alpha(h, g, rr);
          const auto comp = matmul(beta[grg * n + h], beta[rr * n + g], ops);
          if (!matrix_equal(beta[rr * n + hg], comp, ops.root(m, s), ops))
            bad.push_back({rr, g, h});
        }
      }
    return bad;
  });
  r.checked = static_cast<std::uint64_t>(n) * n * n;
  for (const auto& ch : chunks)
    for (const auto& w : ch) {
      r.valid = false;
      if (r.witnesses.size() < kCap) r.witnesses.push_back(w);
    }
  if (!r.problems.empty()) r.valid = false;
  return r;
}

template <class T, class Ops>
ModuleReport module_impl(const CategoricalCharacter& c, const std::vector<Matrix<T>>& beta,
                         const StructureConstants& d, const Ops& ops, Jobs jobs) {
  const FiniteGroup& G = *c.group;
  const std::size_t n = G.order();
  ModuleReport r;
  r.offsets.resize(n);
  for (Element g = 0; g < n; ++g) {
    r.offsets[g] = r.total_dimension;
    r.total_dimension += c.dims[g];
  }
  const Int m = d.modulus();
  auto chunks = map_chunks(n, jobs, [&](std::size_t b, std::size_t e) {
    std::vector<std::vector<Element>> bad;
    for (Element g = static_cast<Element>(b); g < e; ++g)
      for (Element s = 0; s < n; ++s) {
        const Element h = G.conj(s, g);
        const std::size_t y = g * n + s;
        for (Element t = 0; t < n; ++t) {
          if (bad.size() >= kCap) return bad;
          const std::size_t x = h * n + t;
          // x.(y.v) = beta_{h,t} beta_{g,s} on block g
          const auto lhs = matmul(beta[x], beta[y], ops);
          const auto& p = d.product(x, y);
          bool ok;
          if (!p) {
            ok = is_zero_matrix(lhs, ops);
          } else if (p->k / n == g) {
            ok = matrix_equal(lhs, beta[p->k], ops.root(m, p->e), ops);
          } else {
            // the table lands on a different source block
            ok = is_zero_matrix(lhs, ops) && is_zero_matrix(beta[p->k], ops);
          }
          if (!ok) bad.push_back({g, s, t});
        }
      }
    return bad;
  });
  r.checked = static_cast<std::uint64_t>(d.dim()) * d.dim();
  for (const auto& ch : chunks)
    for (const auto& w : ch) {
      r.valid = false;
      if (r.witnesses.size() < kCap) r.witnesses.push_back(w);
    }
  // products of non-composable arrows act by zero; the table must agree
  for (std::size_t x = 0; x < d.dim() && r.witnesses.size() < kCap; ++x)
    for (std::size_t y = 0; y < d.dim(); ++y) {
      const Element h = static_cast<Element>(x / n);
      const Element g = static_cast<Element>(y / n), s = static_cast<Element>(y % n);
      if (h == G.conj(s, g)) continue;
      const auto& p = d.product(x, y);
      if (p && c.dims[p->k / n] != 0 && !is_zero_matrix(beta[p->k], ops)) {
        r.valid = false;
        r.witnesses.push_back({g, s, h, static_cast<Element>(x % n)});
        if (r.witnesses.size() >= kCap) break;
      }
    }
  for (std::size_t u : d.unit())
    if (!is_identity(beta[u], ops)) r.unit_ok = false;
  if (d.unit().size() != n) r.unit_ok = false;
  if (!r.unit_ok) r.valid = false;
  return r;
}

}  // namespace

CategoricalCharacter basic_character(const Cochain& theta) {
  if (theta.degree() != 2) throw ValidationError("basic character needs a 2-cochain");
  if (!theta.normalized()) throw ValidationError("theta must be normalised");
  const auto xi = transgress2(theta);
  const std::size_t n = theta.group().order();
  const Int N = theta.modulus();
  std::vector<ExactMatrix> beta;
  beta.reserve(n * n);
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      ExactMatrix m(1, 1, Cyclotomic::root(N, xi(g, h)));
      beta.push_back(std::move(m));
    }
  return {theta.group_ptr(), N, std::vector<std::size_t>(n, 1), std::move(beta)};
}

CategoricalCharacter trivial_character(GroupPtr group, Int modulus, std::vector<std::size_t> dims) {
  const FiniteGroup& G = *group;
  const std::size_t n = G.order();
  if (dims.size() != n) throw ValidationError("dims must list one dimension per element");
  std::vector<ExactMatrix> beta;
  for (Element g = 0; g < n; ++g)
    for (Element h = 0; h < n; ++h) {
      if (dims[G.conj(h, g)] != dims[g]) throw ValidationError("dims is not a class function");
      ExactMatrix m(dims[g], dims[g], Cyclotomic::integer(modulus, 0));
      for (std::size_t i = 0; i < dims[g]; ++i) m(i, i) = Cyclotomic::integer(modulus, 1);
      beta.push_back(std::move(m));
    }
  return {std::move(group), modulus, std::move(dims), std::move(beta)};
}

CharacterReport verify_character(const CategoricalCharacter& c, const Cochain& alpha, Jobs jobs) {
  check_shapes(c);
  if (alpha.degree() != 3) throw ValidationError("alpha must have degree 3");
  if (!same_group(alpha.group(), *c.group))
    throw ValidationError("alpha and the character live on different groups");
  if (!alpha.normalized()) throw ValidationError("alpha must be normalised");
  if (!is_cocycle(alpha, jobs).cocycle) throw ValidationError("alpha is not a 3-cocycle");
  if (c.exact()) {
    const auto& beta = std::get<0>(c.beta);
    return verify_impl(c, beta, alpha, ExactOps{c.modulus}, ExactInvertibility(beta), jobs);
  }
  const auto& beta = std::get<1>(c.beta);
  const double tol = c.tolerance;
  return verify_impl(c, beta, alpha, FloatOps{tol},
                     [tol](const FloatMatrix& m) { return float_invertible(m, tol); }, jobs);
}

TwoCharacter joint_trace(const CategoricalCharacter& c) {
  check_shapes(c);
  const FiniteGroup& G = *c.group;
  const std::size_t n = G.order();
  TwoCharacter t{c.group, {}};
  auto trace = [&](const auto& beta, auto zero) {
    using S = decltype(zero);
    std::vector<std::optional<S>> out(n * n);
    for (Element g = 0; g < n; ++g)
      for (Element h = 0; h < n; ++h) {
        if (G.mul(g, h) != G.mul(h, g)) continue;
        S acc = zero;
        const auto& m = beta[g * n + h];
        for (std::size_t i = 0; i < m.rows; ++i) acc = acc + m(i, i);
        out[g * n + h] = acc;
      }
    return out;
  };
  if (c.exact())
    t.values = trace(std::get<0>(c.beta), Cyclotomic::integer(c.modulus, 0));
  else
    t.values = trace(std::get<1>(c.beta), std::complex<double>(0));
  return t;
}

ModuleReport character_to_module(const CategoricalCharacter& c, const StructureConstants& d,
                                 Jobs jobs) {
  check_shapes(c);
  const std::size_t n = c.group->order();
  if (d.dim() != n * n)
    throw ValidationError("algebra dimension " + std::to_string(d.dim()) +
                          " does not match |G|^2 = " + std::to_string(n * n));
  for (std::size_t i = 0; i < d.dim(); ++i)
    if (d.labels()[i] != std::vector<Element>{static_cast<Element>(i / n),
                                              static_cast<Element>(i % n)})
      throw ValidationError("algebra basis is not the arrows of the inertia groupoid");
  if (c.exact()) return module_impl(c, std::get<0>(c.beta), d, ExactOps{c.modulus}, jobs);
  return module_impl(c, std::get<1>(c.beta), d, FloatOps{c.tolerance}, jobs);
}

}  // namespace gerbal

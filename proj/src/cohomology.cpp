#include "gerbal/cohomology.hpp"

#include <string>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

std::size_t ipow(std::size_t b, int e) {
  std::size_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::vector<std::size_t> all_indices(std::size_t order, int degree) {
  std::vector<std::size_t> out(ipow(order, degree));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = i;
  return out;
}

// Matrix of d restricted to the given row/column tuple index sets.
ModMatrix build_matrix(const FiniteGroup& g, int degree,
                       const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
  const std::size_t n = g.order();
  std::vector<std::size_t> col_pos(ipow(n, degree), SIZE_MAX);
  for (std::size_t j = 0; j < cols.size(); ++j) col_pos[cols[j]] = j;

  ModMatrix d(rows.size(), cols.size());
  std::vector<Element> t(static_cast<std::size_t>(degree + 1));
  std::vector<Element> face(static_cast<std::size_t>(degree));
  auto encode = [&](const std::vector<Element>& f) {
    std::size_t idx = 0;
    for (Element e : f) idx = idx * n + e;
    return idx;
  };
  auto add = [&](std::size_t r, Int sign) {
    const std::size_t c = col_pos[encode(face)];
    if (c != SIZE_MAX) d(r, c) += sign;
  };
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::size_t idx = rows[r];
    for (std::size_t i = t.size(); i-- > 0;) {
      t[i] = static_cast<Element>(idx % n);
      idx /= n;
    }
    for (int j = 0; j < degree; ++j) face[j] = t[j + 1];
    add(r, 1);
    for (int i = 1; i <= degree; ++i) {
      int w = 0;
      for (int j = 0; j < degree + 1; ++j) {
        if (j == i - 1) {
          face[w++] = g.mul(t[j], t[j + 1]);
          ++j;
        } else {
          face[w++] = t[j];
        }
      }
      add(r, i % 2 == 0 ? 1 : -1);
    }
    for (int j = 0; j < degree; ++j) face[j] = t[j];
    add(r, (degree + 1) % 2 == 0 ? 1 : -1);
  }
  return d;
}

}  // namespace

std::vector<std::size_t> normalized_tuple_indices(std::size_t order, int degree) {
  std::vector<std::size_t> out;
  const std::size_t total = ipow(order, degree);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t idx = i;
    bool ok = true;
    for (int k = 0; k < degree; ++k) {
      if (idx % order == 0) ok = false;
      idx /= order;
    }
    if (ok) out.push_back(i);
  }
  return out;
}

ModMatrix coboundary_matrix(const FiniteGroup& g, int degree, bool normalized) {
  if (degree < 0 || degree >= kMaxDegree)
    throw UnsupportedError("coboundary matrix degree must be in 0..3");
  const std::size_t n = g.order();
  auto rows = normalized ? normalized_tuple_indices(n, degree + 1) : all_indices(n, degree + 1);
  auto cols = normalized ? normalized_tuple_indices(n, degree) : all_indices(n, degree);
  return build_matrix(g, degree, rows, cols);
}

std::optional<Cochain> solve_coboundary(const Cochain& z, Int lift_factor) {
  if (z.degree() != 2 && z.degree() != 3)
    throw UnsupportedError("solve_coboundary supports degrees 2 and 3");
  if (lift_factor < 1) throw ValidationError("lift factor must be positive");
  if (!is_cocycle(z).cocycle)
    throw ValidationError("solve_coboundary: input is not a cocycle");

  const FiniteGroup& g = z.group();
  const std::size_t n = g.order();
  const bool norm = z.normalized();
  const int k = z.degree();
  auto rows = norm ? normalized_tuple_indices(n, k) : all_indices(n, k);
  auto cols = norm ? normalized_tuple_indices(n, k - 1) : all_indices(n, k - 1);
  const Int m = z.modulus() * lift_factor;

  ModMatrix rhs(rows.size(), 1);
  for (std::size_t r = 0; r < rows.size(); ++r) rhs(r, 0) = z.at_index(rows[r]) * lift_factor;
  auto diag = diagonalize(build_matrix(g, k - 1, rows, cols), m, {}, std::move(rhs));
  std::vector<Int> ub(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) ub[r] = diag.rhs(r, 0);
  auto x = diag.solve_transformed(ub);
  if (!x) return std::nullopt;

  Cochain theta(z.group_ptr(), k - 1, m);
  for (std::size_t c = 0; c < cols.size(); ++c) theta.set_index(cols[c], (*x)[c]);
  return theta;
}

CoboundarySolver::CoboundarySolver(GroupPtr group, int cocycle_degree, Int modulus)
    : group_(std::move(group)), degree_(cocycle_degree), modulus_(modulus) {
  if (degree_ != 2 && degree_ != 3)
    throw UnsupportedError("CoboundarySolver supports degrees 2 and 3");
  const std::size_t n = group_->order();
  rows_ = normalized_tuple_indices(n, degree_);
  cols_ = normalized_tuple_indices(n, degree_ - 1);
  diag_ = diagonalize(build_matrix(*group_, degree_ - 1, rows_, cols_), modulus_,
                      {.track_left = true});
}

std::vector<Int> CoboundarySolver::pack(const Cochain& z) const {
  if (z.group_ptr() != group_ || z.degree() != degree_ || z.modulus() != modulus_)
    throw ValidationError("cochain does not match solver group/degree/modulus");
  if (!z.normalized()) throw ValidationError("solver expects a normalised cochain");
  std::vector<Int> b(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) b[r] = z.at_index(rows_[r]);
  return b;
}

std::optional<Cochain> CoboundarySolver::solve(const Cochain& z) const {
  auto x = diag_.solve(pack(z));
  if (!x) return std::nullopt;
  Cochain theta(group_, degree_ - 1, modulus_);
  for (std::size_t c = 0; c < cols_.size(); ++c) theta.set_index(cols_[c], (*x)[c]);
  return theta;
}

std::vector<Int> CoboundarySolver::class_key(const Cochain& z) const {
  return diag_.coset_key(pack(z));
}

bool CoboundarySolver::is_coboundary(const Cochain& z) const {
  for (Int v : class_key(z))
    if (v != 0) return false;
  return true;
}

std::vector<Int> cohomology_invariants(const FiniteGroup& g, Int modulus, int degree,
                                       std::size_t entry_bound) {
  if (degree < 1 || degree > 3)
    throw UnsupportedError("cohomology_invariants supports degrees 1..3");
  if (modulus < 1) throw ValidationError("modulus must be positive");
  const std::size_t n = g.order();
  const std::size_t cols_k = ipow(n - 1, degree);
  const std::size_t rows_k = ipow(n - 1, degree + 1);
  if (cols_k * rows_k > entry_bound)
    throw UnsupportedError("cohomology_invariants: coboundary matrix of " +
                           std::to_string(rows_k) + "x" + std::to_string(cols_k) +
                           " exceeds the resource bound");
  const Int m = modulus;
  auto dk = diagonalize(coboundary_matrix(g, degree, true), m,
                        {.track_right_inverse = true});
  const ModMatrix prev = coboundary_matrix(g, degree - 1, true);  // cols_k x cols_{k-1}

  // In y = V^-1 x coordinates the kernel is (+)_i c_i Z/M, c_i = M / d_i for
  // pivots and 1 for free coordinates; that is (+)_i Z/d_i (+) (Z/M)^free.
  const std::size_t r = dk.rank();
  std::vector<Int> c(cols_k, 1);
  for (std::size_t i = 0; i < r; ++i) c[i] = m / dk.pivots[i];

  ModMatrix rel(cols_k, cols_k + prev.cols());
  for (std::size_t i = 0; i < r; ++i) rel(i, i) = dk.pivots[i];
  const ModMatrix& vinv = *dk.right_inverse;
  for (std::size_t j = 0; j < prev.cols(); ++j) {
    std::vector<Int> col(cols_k);
    for (std::size_t i = 0; i < cols_k; ++i) col[i] = prev(i, j);
    const auto w = mat_vec(vinv, col, m);
    for (std::size_t i = 0; i < cols_k; ++i) {
      if (w[i] % c[i] != 0)
        throw Error("cohomology_invariants: image not inside kernel (d o d != 0)");
      rel(i, cols_k + j) = w[i] / c[i];
    }
  }
  return cokernel_invariants(rel, m);
}

std::vector<Cochain> cocycle_generators(const GroupPtr& g, int degree, Int modulus) {
  const std::size_t n = g->order();
  const auto cols = normalized_tuple_indices(n, degree);
  auto dk = diagonalize(coboundary_matrix(*g, degree, true), modulus);
  std::vector<Cochain> gens;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const Int scale = i < dk.rank() ? modulus / dk.pivots[i] : 1;
    Cochain z(g, degree, modulus);
    bool nonzero = false;
    for (std::size_t r = 0; r < cols.size(); ++r) {
      const Int v = mod(dk.right(r, i) * scale, modulus);
      if (v != 0) nonzero = true;
      z.set_index(cols[r], v);
    }
    if (nonzero) gens.push_back(std::move(z));
  }
  return gens;
}

}  // namespace gerbal

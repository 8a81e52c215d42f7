#include "gerbal/zmod.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "gerbal/error.hpp"

namespace gerbal {

namespace {

inline Int mulmod(Int a, Int b, Int m) noexcept {
  return static_cast<Int>((static_cast<__int128>(a) * b) % m);
}

// r1 <- a*r1 + b*r2, r2 <- c*r1 + d*r2 over a strided range.
void combine(Int* r1, Int* r2, std::size_t count, std::size_t stride, Int a, Int b,
             Int c, Int d, Int m) {
  for (std::size_t i = 0; i < count; ++i) {
    Int& x = r1[i * stride];
    Int& y = r2[i * stride];
    const Int nx = mod(mulmod(a, x, m) + mulmod(b, y, m), m);
    const Int ny = mod(mulmod(c, x, m) + mulmod(d, y, m), m);
    x = nx;
    y = ny;
  }
}

// r2 <- r2 - q*r1
void axpy(const Int* r1, Int* r2, std::size_t count, std::size_t stride, Int q, Int m) {
  if (q == 0) return;
  for (std::size_t i = 0; i < count; ++i)
    r2[i * stride] = mod(r2[i * stride] - mulmod(q, r1[i * stride], m), m);
}

void scale(Int* r, std::size_t count, std::size_t stride, Int u, Int m) {
  for (std::size_t i = 0; i < count; ++i) r[i * stride] = mulmod(r[i * stride], u, m);
}

void swap_range(Int* r1, Int* r2, std::size_t count, std::size_t stride) {
  for (std::size_t i = 0; i < count; ++i) std::swap(r1[i * stride], r2[i * stride]);
}

// Unit u with a == u * gcd(a, m) (mod m).
Int unit_part(Int a, Int m) {
  const Int d = gcd(a, m);
  const Int a1 = a / d, m1 = m / d;
  for (Int k = 0; k < d; ++k) {
    const Int u = a1 + k * m1;
    if (gcd(u, m) == 1) return mod(u, m);
  }
  throw Error("unit_part: no unit found (unreachable)");
}

struct RowTarget {
  Int* base;
  std::size_t cols;
  Int* row(std::size_t r) const { return base + r * cols; }
};

}  // namespace

Int gcd(Int a, Int b) noexcept {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm(Int a, Int b) noexcept { return a / gcd(a, b) * b; }

ExtGcd ext_gcd(Int a, Int b) noexcept {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

Int inverse_mod(Int a, Int m) {
  const auto e = ext_gcd(mod(a, m), m);
  if (e.g != 1)
    throw Error("inverse_mod: " + std::to_string(a) + " is not a unit modulo " +
                std::to_string(m));
  return mod(e.x, m);
}

ModMatrix ModMatrix::identity(std::size_t n) {
  ModMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

std::vector<Int> mat_vec(const ModMatrix& a, const std::vector<Int>& x, Int m) {
  std::vector<Int> y(a.rows(), 0);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const Int* row = a.row(r);
    Int acc = 0;
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (row[c] != 0 && x[c] != 0) acc = mod(acc + mulmod(row[c], x[c], m), m);
    y[r] = acc;
  }
  return y;
}

Diagonalization diagonalize(ModMatrix a, Int m, DiagonalizeOptions opts, ModMatrix rhs) {
  if (m < 1) throw Error("diagonalize: modulus must be positive");
  const std::size_t rows = a.rows(), cols = a.cols();
  Diagonalization out;
  out.modulus = m;
  out.rows = rows;
  out.cols = cols;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = mod(a(r, c), m);
  for (std::size_t r = 0; r < rhs.rows(); ++r)
    for (std::size_t c = 0; c < rhs.cols(); ++c) rhs(r, c) = mod(rhs(r, c), m);

  std::optional<ModMatrix> left;
  if (opts.track_left) left = ModMatrix::identity(rows);
  ModMatrix right = ModMatrix::identity(cols);
  std::optional<ModMatrix> right_inv;
  if (opts.track_right_inverse) right_inv = ModMatrix::identity(cols);
  const bool has_rhs = rhs.rows() == rows && rhs.cols() > 0;

  auto row_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_range(a.row(i), a.row(j), cols, 1);
    if (left) swap_range(left->row(i), left->row(j), rows, 1);
    if (has_rhs) swap_range(rhs.row(i), rhs.row(j), rhs.cols(), 1);
  };
  auto row_scale = [&](std::size_t i, Int u) {
    scale(a.row(i), cols, 1, u, m);
    if (left) scale(left->row(i), rows, 1, u, m);
    if (has_rhs) scale(rhs.row(i), rhs.cols(), 1, u, m);
  };
  auto row_axpy = [&](std::size_t src, std::size_t dst, Int q) {
    axpy(a.row(src), a.row(dst), cols, 1, q, m);
    if (left) axpy(left->row(src), left->row(dst), rows, 1, q, m);
    if (has_rhs) axpy(rhs.row(src), rhs.row(dst), rhs.cols(), 1, q, m);
  };
  auto row_combine = [&](std::size_t i, std::size_t j, Int x, Int y, Int c, Int d) {
    combine(a.row(i), a.row(j), cols, 1, x, y, c, d, m);
    if (left) combine(left->row(i), left->row(j), rows, 1, x, y, c, d, m);
    if (has_rhs) combine(rhs.row(i), rhs.row(j), rhs.cols(), 1, x, y, c, d, m);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_range(&a(0, i), &a(0, j), rows, cols);
    swap_range(&right(0, i), &right(0, j), cols, cols);
    if (right_inv) swap_range(right_inv->row(i), right_inv->row(j), cols, 1);
  };
  auto col_axpy = [&](std::size_t src, std::size_t dst, Int q) {
    axpy(&a(0, src), &a(0, dst), rows, cols, q, m);
    axpy(&right(0, src), &right(0, dst), cols, cols, q, m);
    // C^-1 = I + q e_src e_dst^T
    if (right_inv) axpy(right_inv->row(dst), right_inv->row(src), cols, 1, mod(-q, m), m);
  };
  auto col_combine = [&](std::size_t i, std::size_t j, Int x, Int y, Int c, Int d) {
    // new col_i = x col_i + y col_j ; new col_j = c col_i + d col_j
    combine(&a(0, i), &a(0, j), rows, cols, x, y, c, d, m);
    combine(&right(0, i), &right(0, j), cols, cols, x, y, c, d, m);
    // C = [[x, c], [y, d]] (columns i, j); C^-1 = [[d, -c], [-y, x]]
    if (right_inv)
      combine(right_inv->row(i), right_inv->row(j), cols, 1, d, mod(-c, m), mod(-y, m),
              x, m);
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Pivot: nonzero entry of the trailing block with the smallest gcd with m.
    std::size_t pi = rows, pj = cols;
    Int best = m;
    for (std::size_t i = t; i < rows && best > 1; ++i) {
      const Int* row = a.row(i);
      for (std::size_t j = t; j < cols; ++j) {
        if (row[j] == 0) continue;
        const Int g = gcd(row[j], m);
        if (g < best) {
          best = g;
          pi = i;
          pj = j;
          if (g == 1) break;
        }
      }
    }
    if (pi == rows) break;
    row_swap(t, pi);
    col_swap(t, pj);
    row_scale(t, inverse_mod(unit_part(a(t, t), m), m));

    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Int b = a(i, t);
        if (b == 0) continue;
        const Int d = a(t, t);
        if (b % d == 0) {
          row_axpy(t, i, b / d);
        } else {
          const auto e = ext_gcd(d, b);
          row_combine(t, i, mod(e.x, m), mod(e.y, m), mod(-(b / e.g), m), d / e.g);
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Int b = a(t, j);
        if (b == 0) continue;
        const Int d = a(t, t);
        if (b % d == 0) {
          col_axpy(t, j, b / d);
        } else {
          const auto e = ext_gcd(d, b);
          col_combine(t, j, mod(e.x, m), mod(e.y, m), mod(-(b / e.g), m), d / e.g);
          dirty = true;  // column t changed below the pivot
        }
      }
    }
    out.pivots.push_back(a(t, t));
    ++t;
  }

  out.left = std::move(left);
  out.right = std::move(right);
  out.right_inverse = std::move(right_inv);
  if (has_rhs) out.rhs = std::move(rhs);
  return out;
}

std::vector<Int> Diagonalization::coset_key(const std::vector<Int>& b) const {
  if (!left) throw Error("coset_key requires the left transform");
  std::vector<Int> ub = mat_vec(*left, b, modulus);
  for (std::size_t i = 0; i < pivots.size(); ++i) ub[i] = mod(ub[i], pivots[i]);
  return ub;
}

std::optional<std::vector<Int>> Diagonalization::solve(const std::vector<Int>& b) const {
  if (!left) throw Error("solve requires the left transform");
  return solve_transformed(mat_vec(*left, b, modulus));
}

std::optional<std::vector<Int>> Diagonalization::solve_transformed(
    const std::vector<Int>& ub) const {
  std::vector<Int> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const Int v = mod(ub[i], modulus);
    if (i < pivots.size()) {
      if (v % pivots[i] != 0) return std::nullopt;
      y[i] = v / pivots[i];
    } else if (v != 0) {
      return std::nullopt;
    }
  }
  return mat_vec(right, y, modulus);
}

std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders) {
  // prime -> exponents
  std::map<Int, std::vector<int>> powers;
  for (Int n : cyclic_orders) {
    if (n <= 1) continue;
    Int x = n;
    for (Int p = 2; p * p <= x; ++p) {
      int e = 0;
      while (x % p == 0) {
        x /= p;
        ++e;
      }
      if (e > 0) powers[p].push_back(e);
    }
    if (x > 1) powers[x].push_back(1);
  }
  std::size_t count = 0;
  for (auto& [p, es] : powers) {
    std::sort(es.begin(), es.end(), std::greater<>());
    count = std::max(count, es.size());
  }
  // factor k (from the largest) multiplies the k-th largest power of each prime
  std::vector<Int> factors(count, 1);
  for (const auto& [p, es] : powers)
    for (std::size_t k = 0; k < es.size(); ++k)
      for (int i = 0; i < es[k]; ++i) factors[k] *= p;
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<Int> cokernel_invariants(const ModMatrix& a, Int m) {
  auto d = diagonalize(a, m);
  std::vector<Int> orders;
  for (Int p : d.pivots) orders.push_back(gcd(p, m));
  for (std::size_t i = d.rank(); i < a.rows(); ++i) orders.push_back(m);
  return invariant_factors(orders);
}

}  // namespace gerbal

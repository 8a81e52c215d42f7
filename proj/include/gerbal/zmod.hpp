#pragma once

// Integer and Z/M linear algebra: extended gcd, unit normalisation and a
// Smith-style diagonalisation over the principal ideal ring Z/M.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace gerbal {

using Int = std::int64_t;

/// Representative in [0, m).
inline Int mod(Int a, Int m) noexcept {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

Int gcd(Int a, Int b) noexcept;
Int lcm(Int a, Int b) noexcept;

struct ExtGcd {
  Int g, x, y;  // g = x*a + y*b, g >= 0
};
ExtGcd ext_gcd(Int a, Int b) noexcept;

/// Inverse of a unit modulo m. Throws Error if gcd(a, m) != 1.
Int inverse_mod(Int a, Int m);

/// Dense row-major matrix of residues.
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, Int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  static ModMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Int& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  Int operator()(std::size_t r, std::size_t c) const noexcept {
    return data_[r * cols_ + c];
  }
  Int* row(std::size_t r) noexcept { return data_.data() + r * cols_; }
  const Int* row(std::size_t r) const noexcept { return data_.data() + r * cols_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> data_;
};

/// y = A x (mod m)
std::vector<Int> mat_vec(const ModMatrix& a, const std::vector<Int>& x, Int m);

struct DiagonalizeOptions {
  bool track_left = false;           // keep U
  bool track_right_inverse = false;  // keep V^-1
};

/// U A V = diag(pivots) over Z/M with U, V invertible. Each pivot divides
/// the modulus and is in [1, M); rank = pivots.size(). The pivots are not
/// put into divisibility-chain form; use invariant_factors() on the orders.
struct Diagonalization {
  Int modulus = 1;
  std::size_t rows = 0, cols = 0;
  std::vector<Int> pivots;
  std::optional<ModMatrix> left;
  ModMatrix right;
  std::optional<ModMatrix> right_inverse;
  ModMatrix rhs;  // U * rhs, when right-hand sides were supplied

  std::size_t rank() const noexcept { return pivots.size(); }

  /// Canonical coordinates of b modulo the column space of A. Requires
  /// `left`. Two vectors differ by an element of the image iff their keys
  /// are equal.
  std::vector<Int> coset_key(const std::vector<Int>& b) const;
  /// One solution of A x = b or nullopt. Requires `left`.
  std::optional<std::vector<Int>> solve(const std::vector<Int>& b) const;
  /// Same as solve() for a right-hand side already transformed by U.
  std::optional<std::vector<Int>> solve_transformed(const std::vector<Int>& ub) const;
};

/// `rhs` (rows x k) is carried along under the row operations, so systems can
/// be solved without materialising U.
Diagonalization diagonalize(ModMatrix a, Int modulus, DiagonalizeOptions opts = {},
                            ModMatrix rhs = {});

/// Orders of cyclic summands -> invariant factors d1 | d2 | ... (ascending,
/// ones dropped).
std::vector<Int> invariant_factors(const std::vector<Int>& cyclic_orders);

/// Invariant factors of (Z/M)^rows / span(columns of a).
std::vector<Int> cokernel_invariants(const ModMatrix& a, Int modulus);

}  // namespace gerbal

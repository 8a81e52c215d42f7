#pragma once

// Scalars: exact elements of Z[zeta_n], residues in a prime field containing
// an n-th root of unity, and complex doubles.

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include "gerbal/zmod.hpp"

namespace gerbal {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(Int n);
Int euler_phi(Int n);

/// Element of Z[zeta_n] in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// so equality is coefficientwise. Operations between different n work in
/// Z[zeta_lcm].
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(Int n);  // zero
  static Cyclotomic integer(Int n, Int value);
  /// zeta_n^e
  static Cyclotomic root(Int n, Int e);

  Int order() const noexcept { return n_; }
  const std::vector<Int>& coefficients() const noexcept { return c_; }
  bool is_zero() const noexcept;

  /// Same number viewed in Z[zeta_m]; n must divide m.
  Cyclotomic lift_to(Int m) const;
  std::complex<double> to_complex() const;
  /// Image in F_p under zeta_n -> root (root of order n mod p).
  Int to_modular(Int p, Int root) const;
  std::string to_string() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(Int n, std::vector<Int> reduced) : n_(n), c_(std::move(reduced)) {}
  static Cyclotomic from_powers(Int n, const std::vector<Int>& powers);

  Int n_;
  std::vector<Int> c_;
};

struct ExactEmbedding {};

/// zeta_n -> root in F_p, p prime, p = 1 (mod n), root of exact order n.
struct ModularEmbedding {
  Int n = 1;
  Int p = 2;
  Int root = 1;

  Int zeta(Int e) const;
  /// Image of an exact scalar whose order divides n.
  Int embed(const Cyclotomic& z) const;
};

struct FloatEmbedding {
  double tolerance = 1e-9;
};

using ScalarEmbedding = std::variant<ExactEmbedding, ModularEmbedding, FloatEmbedding>;

bool is_prime(Int p) noexcept;
Int pow_mod(Int a, Int e, Int m) noexcept;

/// Validates p (prime, p = 1 mod n) and picks the smallest generator's
/// (p-1)/n-th power as the root. Throws ValidationError otherwise.
ModularEmbedding make_modular_embedding(Int n, Int p);
/// `count` admissible primes, increasing, all above `above` and below 2^31.
std::vector<Int> admissible_primes(Int n, std::size_t count, Int above = Int{1} << 30);

}  // namespace gerbal

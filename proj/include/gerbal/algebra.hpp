#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "gerbal/cochain.hpp"
#include "gerbal/cyclotomic.hpp"
#include "gerbal/inertia.hpp"
#include "gerbal/parallel.hpp"

namespace gerbal {

/// b_i * b_j = zeta_N^e * b_k
struct ProductEntry {
  std::size_t k;
  Int e;
  friend bool operator==(const ProductEntry&, const ProductEntry&) = default;
};

/// Finite-dimensional algebra whose basis products are root-of-unity
/// multiples of basis elements, or zero. Labels are group elements ({g}) or
/// inertia arrows ({g, s}).
class StructureConstants {
 public:
  /// `products` is row-major dim x dim; nullopt is a zero product.
  /// Throws ValidationError on out-of-range entries.
  StructureConstants(std::vector<std::vector<Element>> labels, Int modulus,
                     std::vector<std::optional<ProductEntry>> products,
                     std::vector<std::size_t> unit);

  std::size_t dim() const noexcept { return labels_.size(); }
  Int modulus() const noexcept { return modulus_; }
  const std::vector<std::vector<Element>>& labels() const noexcept { return labels_; }
  const std::optional<ProductEntry>& product(std::size_t i, std::size_t j) const noexcept {
    return products_[i * labels_.size() + j];
  }
  const std::vector<std::size_t>& unit() const noexcept { return unit_; }
  /// Throws ValidationError for an unknown label.
  std::size_t index_of(const std::vector<Element>& label) const;

 private:
  std::vector<std::vector<Element>> labels_;
  Int modulus_;
  std::vector<std::optional<ProductEntry>> products_;
  std::vector<std::size_t> unit_;
};

/// Sparse element; zero coefficients are never stored.
template <class Scalar>
struct AlgebraElement {
  std::map<std::size_t, Scalar> coefficients;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

using ExactElement = AlgebraElement<Cyclotomic>;
using ModularElement = AlgebraElement<Int>;
using FloatElement = AlgebraElement<std::complex<double>>;

/// e_g e_h = zeta^theta(g,h) e_gh with no checks on theta.
StructureConstants group_algebra_table(const Cochain& theta);
/// Twisted groupoid algebra of the inertia groupoid: b_(sgs^-1,t) b_(g,s) =
/// zeta^psi(g,s,t) b_(g,ts), other products zero, unit sum_g b_(g,1).
/// Basis index of the arrow (g, s) is g * |G| + s. No checks on psi.
StructureConstants twisted_groupoid_algebra(const GroupoidCochain2& psi);

/// Throws ValidationError unless theta is a normalised 2-cocycle.
StructureConstants twisted_group_algebra(const Cochain& theta, Jobs jobs = {});
/// Twisted groupoid algebra of transgress3(alpha). Throws ValidationError
/// unless alpha is a normalised 3-cocycle.
StructureConstants twisted_drinfeld_double(const Cochain& alpha, Jobs jobs = {});

struct AssociativityVerdict {
  bool associative = true;
  std::optional<std::vector<std::size_t>> witness;  // first failing (i, j, k)
  std::uint64_t checked = 0;
};

/// Exhaustive scan of basis triples; exponents are compared exactly.
AssociativityVerdict check_associativity(const StructureConstants& s, Jobs jobs = {});
/// Whether the unit is a two-sided identity on every basis element.
bool check_unit(const StructureConstants& s);

ExactElement basis_element(const StructureConstants& s, std::size_t i);
ExactElement unit_element(const StructureConstants& s);

/// Bilinear extension of the table. Throws ValidationError for basis
/// indices outside the algebra.
ExactElement multiply(const StructureConstants& s, const ExactElement& x, const ExactElement& y,
                      const ExactEmbedding& = {});
ModularElement multiply(const StructureConstants& s, const ModularElement& x,
                        const ModularElement& y, const ModularEmbedding& emb);
FloatElement multiply(const StructureConstants& s, const FloatElement& x, const FloatElement& y,
                      const FloatEmbedding& emb);

ModularElement to_modular(const ExactElement& x, const ModularEmbedding& emb);
FloatElement to_float(const ExactElement& x, const FloatEmbedding& emb = {});

/// Dimension over F_p of the centre. Requires p = 1 mod N (via the embedding,
/// whose order must be a multiple of N) and p > dim * N.
std::size_t center_dimension(const StructureConstants& s, const ModularEmbedding& emb);

struct CenterReport {
  std::size_t dimension = 0;  // minimum over primes = generic dimension
  std::vector<std::pair<Int, std::size_t>> per_prime;
  bool consistent = true;
};

/// Centre dimension over `primes` admissible primes (default: three above 2^30).
CenterReport center_dimension_multi(const StructureConstants& s, std::vector<Int> primes = {});

}  // namespace gerbal

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gerbal/cochain.hpp"
#include "gerbal/zmod.hpp"

namespace gerbal {

/// Matrix of d: C^k -> C^{k+1} (trivial action). With `normalized`, rows and
/// columns are indexed by tuples avoiding the identity, in mixed-radix order.
ModMatrix coboundary_matrix(const FiniteGroup& g, int degree, bool normalized);

/// Tuples of G^k without the identity, in the order used by
/// coboundary_matrix(..., true).
std::vector<std::size_t> normalized_tuple_indices(std::size_t order, int degree);

/// Solves d(theta) = q * z over Z/(N q). Normalised z is solved inside the
/// normalised complex, so the returned theta is normalised too. Returns
/// nullopt when the lifted system is inconsistent. Throws ValidationError if
/// z is not a cocycle and UnsupportedError for degrees other than 2, 3.
std::optional<Cochain> solve_coboundary(const Cochain& z, Int lift_factor = 1);

/// Reusable solver for one (group, degree, modulus): caches the
/// diagonalisation of d on normalised (degree-1)-cochains.
class CoboundarySolver {
 public:
  CoboundarySolver(GroupPtr group, int cocycle_degree, Int modulus);

  /// theta with d theta = z, z normalised at this solver's modulus.
  std::optional<Cochain> solve(const Cochain& z) const;
  /// Canonical key of the class of z modulo normalised coboundaries.
  std::vector<Int> class_key(const Cochain& z) const;
  bool is_coboundary(const Cochain& z) const;

  Int modulus() const noexcept { return modulus_; }

 private:
  std::vector<Int> pack(const Cochain& z) const;

  GroupPtr group_;
  int degree_;
  Int modulus_;
  std::vector<std::size_t> rows_, cols_;
  Diagonalization diag_;
};

inline constexpr std::size_t kCohomologyEntryBound = std::size_t{1} << 26;

/// Invariant factors of H^k(G, Z/N), k in 1..3, via the normalised bar
/// complex. Empty means the trivial group.
std::vector<Int> cohomology_invariants(const FiniteGroup& g, Int modulus, int degree,
                                       std::size_t entry_bound = kCohomologyEntryBound);

/// Generators of the normalised k-cocycles Z^k(G, Z/N), as cochains.
std::vector<Cochain> cocycle_generators(const GroupPtr& g, int degree, Int modulus);

}  // namespace gerbal

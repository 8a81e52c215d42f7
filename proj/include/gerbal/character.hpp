#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gerbal/algebra.hpp"
#include "gerbal/cochain.hpp"
#include "gerbal/cyclotomic.hpp"
#include "gerbal/group.hpp"
#include "gerbal/parallel.hpp"

namespace gerbal {

/// Dense row-major matrix.
template <class T>
struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, T fill) : rows(r), cols(c), data(r * c, fill) {}
  T& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

using ExactMatrix = Matrix<Cyclotomic>;
using FloatMatrix = Matrix<std::complex<double>>;

/// Output data (X(g), beta_{g,h}) of a categorical character: dims[g] and
/// beta[g * |G| + h], a dims[hgh^-1] x dims[g] matrix. Exact entries live in
/// Z[zeta_N]; float entries are compared with `tolerance`.
struct CategoricalCharacter {
  GroupPtr group;
  Int modulus = 1;
  std::vector<std::size_t> dims;
  std::variant<std::vector<ExactMatrix>, std::vector<FloatMatrix>> beta;
  double tolerance = 1e-9;

  bool exact() const noexcept { return beta.index() == 0; }
};

/// dims 1 and beta_{g,h} = zeta_N^(theta(h,g) - theta(hgh^-1,h)).
/// Throws ValidationError unless theta is a normalised 2-cochain.
CategoricalCharacter basic_character(const Cochain& theta);

/// beta_{g,h} = identity; throws ValidationError unless dims is a class function.
CategoricalCharacter trivial_character(GroupPtr group, Int modulus, std::vector<std::size_t> dims);

struct CharacterReport {
  bool valid = true;
  std::vector<std::vector<Element>> witnesses;  // (r, g, h), capped at 10
  std::uint64_t checked = 0;
  std::vector<std::string> problems;  // failed type invariants
};

/// For all (r, g, h):
///   beta_{r,hg} = zeta^S beta_{grg^-1,h} beta_{r,g},
///   S = alpha(h,grg^-1,g) - alpha(hgrg^-1h^-1,h,g) - alpha(h,g,r),
/// plus the type invariants (dims a class function, beta invertible,
/// beta_{g,1} = id). Throws ValidationError on shape mismatches or when
/// alpha is not a normalised 3-cocycle on the same group.
CharacterReport verify_character(const CategoricalCharacter& c, const Cochain& alpha,
                                 Jobs jobs = {});

/// chi(g, h) = tr beta_{g,h} on commuting pairs, index g * |G| + h.
struct TwoCharacter {
  GroupPtr group;
  std::variant<std::vector<std::optional<Cyclotomic>>,
               std::vector<std::optional<std::complex<double>>>>
      values;
};

TwoCharacter joint_trace(const CategoricalCharacter& c);

struct ModuleReport {
  bool valid = true;
  std::size_t total_dimension = 0;
  std::vector<std::size_t> offsets;  // start of the X(g) block
  std::vector<std::vector<Element>> witnesses;  // (g, s, t): b_(sgs^-1,t) b_(g,s) fails
  std::uint64_t checked = 0;
  bool unit_ok = true;
};

/// Makes ⊕_g X(g) a module over the double (arrow (g, s) acts by beta_{g,s}
/// from the X(g) block to the X(sgs^-1) block) and checks (xy).v = x.(y.v)
/// for all basis pairs, and that the unit acts as the identity. Throws
/// ValidationError if d is not an algebra on the arrows of c's group.
ModuleReport character_to_module(const CategoricalCharacter& c, const StructureConstants& d,
                                 Jobs jobs = {});

}  // namespace gerbal

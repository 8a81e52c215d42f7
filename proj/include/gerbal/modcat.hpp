#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gerbal/cochain.hpp"
#include "gerbal/group.hpp"
#include "gerbal/parallel.hpp"

namespace gerbal {

/// (H, theta): theta is a normalised 2-cochain on H (in H's own numbering)
/// with d theta = q * restrict(alpha, H), where q = theta.modulus() / N.
struct ModuleCategoryLabel {
  SubgroupRef subgroup;
  Cochain theta;
};

inline constexpr std::size_t kModcatOrderBound = 16;

/// Lift factor used when none is given: |G|.
Int default_lift_factor(const FiniteGroup& g);

/// Some theta with d theta = Q * alpha|_H at modulus N * Q, or nullopt.
/// `lift_factor` 0 means the default. Throws ValidationError unless alpha is
/// a normalised 3-cocycle on H's parent.
std::optional<Cochain> label_witness(const Cochain& alpha, const SubgroupRef& h,
                                     Int lift_factor = 0);
/// Whether any label on H exists.
bool obstruction_vanishes(const Cochain& alpha, const SubgroupRef& h, Int lift_factor = 0);

/// Empty string when the label is valid for alpha, otherwise the reason.
std::string label_problem(const ModuleCategoryLabel& label, const Cochain& alpha);

/// One label per equivalence class: (H, theta) ~ (sHs^-1, theta') when the
/// s-conjugate of theta, corrected by the cochain that compares alpha with
/// its conjugate, differs from theta' by a coboundary after lifting by Q.
/// Ordered as the subgroup classes of enumerate_subgroups, then by the
/// breadth-first order of the theta classes. Throws UnsupportedError for
/// |G| > 16.
std::vector<ModuleCategoryLabel> enumerate_indecomposables(const Cochain& alpha,
                                                           Int lift_factor = 0, Jobs jobs = {});

struct InducedDescriptor {
  ModuleCategoryLabel label;
  std::size_t simple_count = 0;  // [G : H]
};

/// Throws ValidationError if the label is not valid for alpha.
InducedDescriptor induce(const ModuleCategoryLabel& label, const Cochain& alpha);

struct DecompositionEntry {
  ModuleCategoryLabel label;
  std::size_t multiplicity = 1;
};

struct DecompositionReport {
  std::vector<DecompositionEntry> entries;
};

struct DecompositionVerdict {
  bool valid = true;
  std::size_t total = 0;  // sum of multiplicity * [G : H]
  std::vector<std::string> problems;
};

DecompositionVerdict verify_decomposition(const DecompositionReport& report, const Cochain& alpha,
                                          std::size_t expected_total);

}  // namespace gerbal

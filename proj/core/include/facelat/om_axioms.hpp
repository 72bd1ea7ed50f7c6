#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "facelat/covectors.hpp"

namespace facelat {

enum class OmAxiom { Zero, Opposite, Composition, Elimination };

std::string_view to_string(OmAxiom axiom);

struct OmViolation {
  OmAxiom axiom;
  SignVector f;                      // first operand (absent for Zero)
  SignVector g;                      // second operand (Composition/Elimination)
  std::optional<std::size_t> hyperplane;  // eliminated hyperplane
};

struct OmReport {
  std::vector<OmViolation> violations;
  bool ok() const { return violations.empty(); }
  bool violates(OmAxiom a) const;
};

struct OmCheckOptions {
  /// Collect every witness instead of stopping at the first one.
  bool all_witnesses = true;
};

/// Checks the four covector axioms: zero vector, closure under opposite and
/// composition, and elimination. O(|S|^2 |A|) lookups.
OmReport check_om_axioms(const CovectorSet& set, OmCheckOptions options = {});

}  // namespace facelat

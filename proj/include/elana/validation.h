#pragma once

#include <string>
#include <vector>

#include "elana/interpretation.h"

namespace elana {

struct Violation {
  // "forbidden-combination", "bijection-coherence", "closed-images",
  // "analogous-exclusion", "natural-extension", "kappa-table", "kappa-domain",
  // "kappa-commutes", "kappa-nonempty" or "vocabulary".
  std::string condition;
  std::string message;
  std::string witness;
};

struct ValidityReport {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool valid() const { return violations.empty(); }
  bool has(const std::string& condition) const;
};

// Structure checks (mutual exclusion of analogous domains only in strong
// mode), bijection coherence, natural atoms, and every κ.
ValidityReport validate_interpretation(const Interpretation& interp);

// κ checks for one role, appended to `report`.
void validate_kappa(const Interpretation& interp, const std::string& role,
                    const KappaTable& kappa, ValidityReport& report);

}  // namespace elana

#pragma once

#include <optional>

#include "elana/concept.h"
#include "elana/interpretation.h"

namespace elana {

// Concept evaluation. `extra` widens the set of atoms accepted as natural
// inside ⋈ (used when a TBox declares naturalness the interpretation does
// not). Unknown atoms or roles raise EvaluationError.
IndividualSet extension(const Interpretation& interp, const Concept& c,
                        const Signature* extra = nullptr);
FeatureSet phi(const Interpretation& interp, const Concept& c,
               const Signature* extra = nullptr);
DomainSet delta(const Interpretation& interp, const Concept& c,
                const Signature* extra = nullptr);
bool satisfies_ci(const Interpretation& interp, const Concept& lhs,
                  const Concept& rhs, const Signature* extra = nullptr);
bool is_empty(const Interpretation& interp, const Concept& c,
              const Signature* extra = nullptr);

// ⋂ π(d) over the set; the whole universe for the empty set.
FeatureSet phi_of(const Interpretation& interp, const IndividualSet& members);
// {d | F ⊆ π(d)}.
IndividualSet up_set(const Interpretation& interp, FeatureSet f);

// φ computed from feature sets alone, available when the concept mentions
// no plain atoms and no ordinary roles (every such concept denotes the
// up-set of its φ). Already normalized: inconsistent sets become 𝓕.
std::optional<FeatureSet> symbolic_phi(const Interpretation& interp,
                                       const Concept& c,
                                       const Signature* extra = nullptr);

}  // namespace elana

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "elana/analogy.h"
#include "elana/concept.h"
#include "elana/interpretation.h"
#include "elana/tbox.h"

namespace elana {

// A set of (source, target) domain pairs with distinct sources, distinct
// targets and no identity pairs; identity on every other domain.
class DomainTranslation {
 public:
  DomainTranslation() = default;
  // Throws TranslationError on repeated sources/targets or (s,s).
  explicit DomainTranslation(std::vector<DomainPair> pairs);

  const std::vector<DomainPair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  DomainSet sources() const;
  DomainSet targets() const;
  // Target of `source`, or -1.
  int target_of(int source) const;

  bool operator==(const DomainTranslation&) const = default;
  auto operator<=>(const DomainTranslation&) const = default;

 private:
  std::vector<DomainPair> pairs_;  // sorted by source
};

std::string to_string(const DomainTranslation& u);  // "{(1,2),(3,4)}"

bool valid_for(const AnalogyStructure& analogy, const DomainTranslation& u);

// σ_U(F). Throws TranslationError when U has a pair outside ∼ or F has
// features outside the universe.
FeatureSet apply(const FeatureSpace& space, const AnalogyStructure& analogy,
                 const DomainTranslation& u, FeatureSet f);
FeatureSet apply(const Interpretation& interp, const DomainTranslation& u,
                 FeatureSet f);

DomainTranslation invert(const DomainTranslation& u);
// U ⊕ V. Throws TranslationError if the union repeats a source or target.
DomainTranslation compose(const DomainTranslation& u, const DomainTranslation& v);

// All U with σ_U(φC) = φD, sources inside δ(C) and no target on an
// untranslated domain of δ(C), sorted.
std::vector<DomainTranslation> mu_of_sets(const FeatureSpace& space,
                                          const AnalogyStructure& analogy,
                                          FeatureSet phi_c, FeatureSet phi_d);
std::vector<DomainTranslation> mu(const Interpretation& interp, const Concept& c,
                                  const Concept& d, const Signature* extra = nullptr);

// Standard: μ(C1,C2) ∩ μ(D1,D2) ≠ ∅; strong: additionally equal. Throws
// EvaluationError when a term is not natural.
bool satisfies_ana(const Interpretation& interp, const AnalogyAssertion& a,
                   const Signature* extra = nullptr);
bool satisfies_ana(const Interpretation& interp, const AnalogyAssertion& a,
                   Strength strength, const Signature* extra = nullptr);

}  // namespace elana

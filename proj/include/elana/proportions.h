#pragma once

#include <array>

#include "elana/concept.h"
#include "elana/interpretation.h"
#include "elana/tbox.h"

namespace elana {

// S1 \ S2 = S3 \ S4 and S2 \ S1 = S4 \ S3.
template <class Set>
bool ap(const Set& s1, const Set& s2, const Set& s3, const Set& s4) {
  return (s1 - s2) == (s3 - s4) && (s2 - s1) == (s4 - s3);
}

// S1 ∩ S4 = S2 ∩ S3 and S1 ∪ S4 = S2 ∪ S3.
template <class Set>
bool ap_alt(const Set& s1, const Set& s2, const Set& s3, const Set& s4) {
  return (s1 & s4) == (s2 & s3) && (s1 | s4) == (s2 | s3);
}

inline bool ap_sets(FeatureSet s1, FeatureSet s2, FeatureSet s3, FeatureSet s4) {
  return ap(s1, s2, s3, s4);
}
inline bool ap_sets_alt(FeatureSet s1, FeatureSet s2, FeatureSet s3, FeatureSet s4) {
  return ap_alt(s1, s2, s3, s4);
}

enum class ApLevel { kExtensions, kFeatures, kBoth };

bool ap_concepts(const Interpretation& interp, const Concept& a, const Concept& b,
                 const Concept& c, const Concept& d, ApLevel level);

// [A⊓D ⊑ B⊓C, B⊓C ⊑ A⊓D, A⋈D ⊑ B⋈C, B⋈C ⊑ A⋈D]. Throws EvaluationError
// for a non-natural argument.
std::array<Inclusion, 4> ap_as_cis(const Signature& signature, const Concept& a,
                                   const Concept& b, const Concept& c,
                                   const Concept& d);

}  // namespace elana

#include "elana/proportions.h"

#include "elana/error.h"
#include "elana/evaluator.h"

namespace elana {

bool ap_concepts(const Interpretation& interp, const Concept& a, const Concept& b,
                 const Concept& c, const Concept& d, ApLevel level) {
  bool ext_ok = true, feat_ok = true;
  if (level != ApLevel::kFeatures) {
    ext_ok = ap(extension(interp, a), extension(interp, b), extension(interp, c),
                extension(interp, d));
  }
  if (level != ApLevel::kExtensions) {
    feat_ok = ap(phi(interp, a), phi(interp, b), phi(interp, c), phi(interp, d));
  }
  return ext_ok && feat_ok;
}

std::array<Inclusion, 4> ap_as_cis(const Signature& signature, const Concept& a,
                                   const Concept& b, const Concept& c,
                                   const Concept& d) {
  for (const Concept* x : {&a, &b, &c, &d}) {
    if (!signature.is_natural(*x)) {
      throw EvaluationError("ap_as_cis over non-natural concept " + to_sexpr(*x));
    }
  }
  Concept ad = Concept::And(a, d), bc = Concept::And(b, c);
  Concept a_btw_d = Concept::Between(a, d), b_btw_c = Concept::Between(b, c);
  return {Inclusion{ad, bc}, Inclusion{bc, ad}, Inclusion{a_btw_d, b_btw_c},
          Inclusion{b_btw_c, a_btw_d}};
}

}  // namespace elana

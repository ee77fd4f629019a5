#pragma once

#include <vector>

#include "elana/analogy.h"
#include "elana/feature_space.h"
#include "elana/translations.h"

namespace elana::oracle {

// μ by brute force: every subset of the non-reflexive ∼ pairs is tried and
// the three conditions are checked feature by feature. Sorted like mu().
// Meant for at most 4 domains (12 candidate pairs).
std::vector<DomainTranslation> naive_mu(const FeatureSpace& space,
                                        const AnalogyStructure& analogy, FeatureSet phi_c,
                                        FeatureSet phi_d);

}  // namespace elana::oracle

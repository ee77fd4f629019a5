#include "elana/oracle/naive.h"

#include <algorithm>

#include "elana/error.h"

namespace elana::oracle {

std::vector<DomainTranslation> naive_mu(const FeatureSpace& space,
                                        const AnalogyStructure& analogy, FeatureSet phi_c,
                                        FeatureSet phi_d) {
  std::vector<DomainPair> candidates;
  for (int s = 0; s < space.domain_count(); ++s) {
    for (int t = 0; t < space.domain_count(); ++t) {
      if (s != t && analogy.analogous(s, t)) candidates.emplace_back(s, t);
    }
  }
  if (candidates.size() > 20) throw Error("naive_mu: too many analogous pairs");

  DomainSet delta_c;
  for (int f : phi_c.elements()) delta_c |= DomainSet::Singleton(space.domain_of(f));

  std::vector<DomainTranslation> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << candidates.size()); ++mask) {
    std::vector<DomainPair> pairs;
    DomainSet sources, targets;
    bool distinct = true;
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      auto [s, t] = candidates[i];
      if (sources.contains(s) || targets.contains(t)) distinct = false;
      sources |= DomainSet::Singleton(s);
      targets |= DomainSet::Singleton(t);
      pairs.push_back(candidates[i]);
    }
    if (!distinct) continue;
    if (!sources.subset_of(delta_c)) continue;
    if (targets.intersects(delta_c - sources)) continue;
    FeatureSet image;
    for (int f : phi_c.elements()) {
      int d = space.domain_of(f);
      int mapped = f;
      for (auto [s, t] : pairs) {
        if (s == d) mapped = analogy.image(s, t, f);
      }
      image |= FeatureSet::Singleton(mapped);
    }
    if (image != phi_d) continue;
    out.emplace_back(std::move(pairs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace elana::oracle

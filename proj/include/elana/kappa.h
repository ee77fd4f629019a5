#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elana/analogy.h"
#include "elana/feature_space.h"

namespace elana {

using KappaEntries = std::vector<std::pair<FeatureSet, FeatureSet>>;

// Feature-level map of an intra-domain role. Both input modes are expanded
// to one table per domain over that domain's consistent subsets. Domains
// without input entries inherit them from an analogous domain through the
// bijections.
class KappaTable {
 public:
  enum class Mode { kTabular, kAdditive };

  KappaTable() = default;
  static KappaTable Tabular(const FeatureSpace& space,
                            const AnalogyStructure& analogy,
                            std::map<int, KappaEntries> tables);
  // images: feature -> κ({feature}).
  static KappaTable Additive(const FeatureSpace& space,
                             const AnalogyStructure& analogy,
                             std::map<int, FeatureSet> images);

  Mode mode() const { return mode_; }
  std::optional<FeatureSet> lookup(int domain, FeatureSet f) const;
  // κ(F) for F ∈ 𝒞 as the union of the per-domain entries; the whole
  // universe for inconsistent F. Throws EvaluationError on a missing entry.
  FeatureSet apply(const FeatureSpace& space, FeatureSet f) const;

  const std::vector<std::map<FeatureSet, FeatureSet>>& tables() const {
    return tables_;
  }
  const std::map<int, KappaEntries>& given_tables() const { return given_tables_; }
  const std::map<int, FeatureSet>& given_images() const { return given_images_; }
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  Mode mode_ = Mode::kTabular;
  std::vector<std::map<FeatureSet, FeatureSet>> tables_;
  std::map<int, KappaEntries> given_tables_;
  std::map<int, FeatureSet> given_images_;
  std::vector<std::string> issues_;
};

}  // namespace elana

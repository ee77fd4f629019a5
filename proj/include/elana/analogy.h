#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "elana/feature_space.h"

namespace elana {

using DomainPair = std::pair<int, int>;
using FeatureMap = std::map<int, int>;

// The analogy relation between domains plus the bijections between
// analogous domains. Input is a set of generator pairs, closed to an
// equivalence, and bijections on some pairs; every other bijection is
// completed through the class representative (the smallest domain index).
// Completion problems are kept as issues for the validator instead of
// being resolved silently.
class AnalogyStructure {
 public:
  AnalogyStructure() = default;
  explicit AnalogyStructure(const FeatureSpace& space);
  AnalogyStructure(const FeatureSpace& space,
                   std::vector<DomainPair> generators,
                   std::map<DomainPair, FeatureMap> bijections);

  int domain_count() const { return static_cast<int>(rep_.size()); }
  bool analogous(int s, int t) const { return rep_.at(s) == rep_.at(t); }
  int representative(int d) const { return rep_.at(d); }
  DomainSet classmates(int d) const;
  std::vector<DomainSet> classes() const;

  // Image of feature f of domain s in domain t; -1 if s, t are not analogous.
  int image(int s, int t, int f) const;
  // Maps F ∩ 𝓕ₛ into 𝓕ₜ.
  FeatureSet apply(int s, int t, FeatureSet f) const;

  const std::vector<DomainPair>& generators() const { return generators_; }
  const std::map<DomainPair, FeatureMap>& given_bijections() const {
    return given_;
  }
  const std::vector<std::string>& issues() const { return issues_; }

 private:
  void complete(const FeatureSpace& space);

  std::vector<DomainPair> generators_;
  std::map<DomainPair, FeatureMap> given_;
  std::vector<int> rep_;
  // from_rep_[d][i] is the image in d of the i-th feature of the
  // representative block (features listed in increasing index order).
  std::vector<std::vector<int>> from_rep_;
  std::vector<int> position_;  // feature -> representative position
  std::vector<int> domain_of_;
  std::vector<std::string> issues_;
};

}  // namespace elana

#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "elana/feature_set.h"

namespace elana {

// The feature universe, its partition into thematic domains and the
// forbidden combinations. The whole universe is always among the forbidden
// sets; if the input omits it, it is appended and `all_inserted()` is set.
class FeatureSpace {
 public:
  FeatureSpace() = default;

  // Throws StructureError on duplicate or unknown names, overlapping or
  // non-covering blocks, empty blocks, or more than kMaxFeatures features.
  FeatureSpace(std::vector<std::string> features,
               const std::vector<std::vector<std::string>>& domains,
               const std::vector<std::vector<std::string>>& forbidden);
  FeatureSpace(std::vector<std::string> features,
               std::vector<FeatureSet> domains,
               std::vector<FeatureSet> forbidden);

  int feature_count() const { return static_cast<int>(names_.size()); }
  int domain_count() const { return static_cast<int>(blocks_.size()); }
  FeatureSet all() const { return FeatureSet::FirstN(feature_count()); }
  DomainSet all_domains() const { return DomainSet::FirstN(domain_count()); }
  FeatureSet block(int domain) const { return blocks_.at(domain); }
  const std::vector<FeatureSet>& blocks() const { return blocks_; }
  int domain_of(int feature) const { return domain_of_.at(feature); }
  const std::vector<FeatureSet>& forbidden() const { return forbidden_; }
  bool all_inserted() const { return all_inserted_; }

  const std::string& name(int feature) const { return names_.at(feature); }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when unknown.
  int find(std::string_view name) const;
  int index(std::string_view name) const;  // throws StructureError

  bool consistent(FeatureSet f) const;
  bool consistent(const std::vector<std::string>& names) const;
  // F itself when consistent, the whole universe otherwise.
  FeatureSet normalize(FeatureSet f) const {
    return consistent(f) ? f : all();
  }
  DomainSet domains_of(FeatureSet f) const;

  FeatureSet make_set(const std::vector<std::string>& names) const;
  std::vector<std::string> set_names(FeatureSet f) const;
  // "{c,y}" in feature order.
  std::string format(FeatureSet f) const;

  // Members of the consistent family, in increasing bit order. Throws if the
  // universe is too large to enumerate.
  std::vector<FeatureSet> consistent_family() const;
  std::vector<FeatureSet> consistent_in_domain(int domain) const;
  bool forbidden_contains(FeatureSet f) const;

  FeatureSpace with_forbidden(std::vector<FeatureSet> forbidden) const;

 private:
  void init(std::vector<FeatureSet> forbidden);

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<FeatureSet> blocks_;
  std::vector<int> domain_of_;
  std::vector<FeatureSet> forbidden_;
  bool all_inserted_ = false;
};

inline constexpr int kMaxEnumeratedFeatures = 22;

std::string format_domains(DomainSet domains);  // 1-based, "{1,3}"

}  // namespace elana

#include "elana/feature_space.h"

#include <algorithm>

#include "elana/error.h"

namespace elana {

FeatureSpace::FeatureSpace(std::vector<std::string> features,
                           const std::vector<std::vector<std::string>>& domains,
                           const std::vector<std::vector<std::string>>& forbidden)
    : names_(std::move(features)) {
  if (names_.size() > static_cast<size_t>(kMaxFeatures)) {
    throw StructureError("too many features (max 64)");
  }
  for (size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw StructureError("empty feature name");
    if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
      throw StructureError("duplicate feature '" + names_[i] + "'");
    }
  }
  for (const auto& d : domains) blocks_.push_back(make_set(d));
  std::vector<FeatureSet> xs;
  for (const auto& x : forbidden) xs.push_back(make_set(x));
  init(std::move(xs));
}

FeatureSpace::FeatureSpace(std::vector<std::string> features,
                           std::vector<FeatureSet> domains,
                           std::vector<FeatureSet> forbidden)
    : names_(std::move(features)), blocks_(std::move(domains)) {
  if (names_.size() > static_cast<size_t>(kMaxFeatures)) {
    throw StructureError("too many features (max 64)");
  }
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<int>(i)).second) {
      throw StructureError("duplicate feature '" + names_[i] + "'");
    }
  }
  init(std::move(forbidden));
}

void FeatureSpace::init(std::vector<FeatureSet> forbidden) {
  if (blocks_.size() > static_cast<size_t>(kMaxDomains)) {
    throw StructureError("too many domains (max 64)");
  }
  domain_of_.assign(names_.size(), -1);
  FeatureSet covered;
  for (size_t d = 0; d < blocks_.size(); ++d) {
    FeatureSet b = blocks_[d];
    if (b.empty()) {
      throw StructureError("domain " + std::to_string(d + 1) + " is empty");
    }
    if (!b.subset_of(all())) throw StructureError("domain outside universe");
    if (b.intersects(covered)) {
      FeatureSet clash = b & covered;
      throw StructureError("feature '" + name(clash.elements().front()) +
                           "' occurs in more than one domain");
    }
    covered |= b;
    b.for_each([&](int f) { domain_of_[f] = static_cast<int>(d); });
  }
  if (covered != all()) {
    FeatureSet missing = all() - covered;
    throw StructureError("feature '" + name(missing.elements().front()) +
                         "' belongs to no domain");
  }
  for (FeatureSet x : forbidden) {
    if (!x.subset_of(all())) throw StructureError("forbidden set outside universe");
  }
  forbidden_ = std::move(forbidden);
  all_inserted_ = std::find(forbidden_.begin(), forbidden_.end(), all()) ==
                  forbidden_.end();
  if (all_inserted_) forbidden_.push_back(all());
}

int FeatureSpace::find(std::string_view n) const {
  auto it = index_.find(std::string(n));
  return it == index_.end() ? -1 : it->second;
}

int FeatureSpace::index(std::string_view n) const {
  int i = find(n);
  if (i < 0) throw StructureError("unknown feature '" + std::string(n) + "'");
  return i;
}

bool FeatureSpace::consistent(FeatureSet f) const {
  for (FeatureSet x : forbidden_) {
    if (x.subset_of(f)) return false;
  }
  return true;
}

bool FeatureSpace::consistent(const std::vector<std::string>& names) const {
  return consistent(make_set(names));
}

DomainSet FeatureSpace::domains_of(FeatureSet f) const {
  DomainSet out;
  for (size_t d = 0; d < blocks_.size(); ++d) {
    if (blocks_[d].intersects(f)) out |= DomainSet::Singleton(static_cast<int>(d));
  }
  return out;
}

FeatureSet FeatureSpace::make_set(const std::vector<std::string>& names) const {
  FeatureSet out;
  for (const auto& n : names) out |= FeatureSet::Singleton(index(n));
  return out;
}

std::vector<std::string> FeatureSpace::set_names(FeatureSet f) const {
  std::vector<std::string> out;
  f.for_each([&](int i) { out.push_back(names_[i]); });
  return out;
}

std::string FeatureSpace::format(FeatureSet f) const {
  std::string out = "{";
  bool first = true;
  f.for_each([&](int i) {
    if (!first) out += ",";
    out += names_[i];
    first = false;
  });
  return out + "}";
}

std::vector<FeatureSet> FeatureSpace::consistent_family() const {
  if (feature_count() > kMaxEnumeratedFeatures) {
    throw StructureError("consistent family too large to enumerate (" +
                         std::to_string(feature_count()) + " features)");
  }
  // Depth-first over features in index order; a downward-closed family lets
  // the search stop at the first inconsistent set.
  std::vector<FeatureSet> out;
  const int n = feature_count();
  std::vector<std::pair<FeatureSet, int>> stack{{FeatureSet(), 0}};
  while (!stack.empty()) {
    auto [set, next] = stack.back();
    stack.pop_back();
    out.push_back(set);
    for (int f = next; f < n; ++f) {
      FeatureSet grown = set | FeatureSet::Singleton(f);
      if (consistent(grown)) stack.emplace_back(grown, f + 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FeatureSet> FeatureSpace::consistent_in_domain(int domain) const {
  std::vector<int> fs = block(domain).elements();
  std::vector<FeatureSet> out;
  const uint64_t m = uint64_t{1} << fs.size();
  for (uint64_t mask = 0; mask < m; ++mask) {
    FeatureSet s;
    for (size_t i = 0; i < fs.size(); ++i) {
      if ((mask >> i) & 1) s |= FeatureSet::Singleton(fs[i]);
    }
    if (consistent(s)) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool FeatureSpace::forbidden_contains(FeatureSet f) const {
  return std::find(forbidden_.begin(), forbidden_.end(), f) != forbidden_.end();
}

FeatureSpace FeatureSpace::with_forbidden(std::vector<FeatureSet> forbidden) const {
  return FeatureSpace(names_, blocks_, std::move(forbidden));
}

std::string format_domains(DomainSet domains) {
  std::string out = "{";
  bool first = true;
  domains.for_each([&](int d) {
    if (!first) out += ",";
    out += std::to_string(d + 1);
    first = false;
  });
  return out + "}";
}

}  // namespace elana

#include "elana/analogy.h"

#include <numeric>
#include <set>

#include "elana/error.h"

namespace elana {
namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

std::string pair_name(DomainPair p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

}  // namespace

AnalogyStructure::AnalogyStructure(const FeatureSpace& space)
    : AnalogyStructure(space, {}, {}) {}

AnalogyStructure::AnalogyStructure(const FeatureSpace& space,
                                   std::vector<DomainPair> generators,
                                   std::map<DomainPair, FeatureMap> bijections)
    : generators_(std::move(generators)), given_(std::move(bijections)) {
  const int k = space.domain_count();
  auto check_domain = [&](int d) {
    if (d < 0 || d >= k) {
      throw StructureError("domain index " + std::to_string(d + 1) +
                           " out of range");
    }
  };
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (auto [s, t] : generators_) {
    check_domain(s);
    check_domain(t);
    unite(s, t);
  }
  for (const auto& [p, m] : given_) {
    check_domain(p.first);
    check_domain(p.second);
    for (auto [f, g] : m) {
      if (f < 0 || f >= space.feature_count() || g < 0 ||
          g >= space.feature_count()) {
        throw StructureError("bijection " + pair_name(p) +
                             " mentions an unknown feature");
      }
    }
    // A bijection given on a pair outside the generators still relates the
    // two domains; it is treated as an implicit generator.
    unite(p.first, p.second);
  }
  rep_.resize(k);
  for (int d = 0; d < k; ++d) rep_[d] = find_root(parent, d);
  complete(space);
}

void AnalogyStructure::complete(const FeatureSpace& space) {
  const int k = space.domain_count();
  domain_of_.assign(space.feature_count(), -1);
  for (int f = 0; f < space.feature_count(); ++f) domain_of_[f] = space.domain_of(f);

  for (int d = 0; d < k; ++d) {
    int r = rep_[d];
    if (r != d && space.block(d).size() != space.block(r).size()) {
      issues_.push_back("domains " + std::to_string(r + 1) + " and " +
                        std::to_string(d + 1) +
                        " are analogous but have different sizes");
      rep_[d] = d;
    }
  }

  from_rep_.assign(k, {});
  for (int d = 0; d < k; ++d) {
    if (rep_[d] == d) from_rep_[d] = space.block(d).elements();
  }

  // Validate given maps as total bijections between their blocks.
  std::map<DomainPair, FeatureMap> usable;
  for (const auto& [p, m] : given_) {
    auto [s, t] = p;
    if (s == t) {
      bool identity = true;
      for (auto [f, g] : m) identity = identity && f == g;
      if (!identity) issues_.push_back("bijection " + pair_name(p) + " is not the identity");
      continue;
    }
    if (rep_[s] != rep_[t]) continue;  // size mismatch already reported
    FeatureSet keys, values;
    bool ok = true;
    for (auto [f, g] : m) {
      if (domain_of_[f] != s || domain_of_[g] != t) ok = false;
      if (values.contains(g)) ok = false;
      keys |= FeatureSet::Singleton(f);
      values |= FeatureSet::Singleton(g);
    }
    if (!ok || keys != space.block(s) || values != space.block(t)) {
      issues_.push_back("bijection " + pair_name(p) +
                        " is not a bijection between the two domains");
      continue;
    }
    usable.emplace(p, m);
  }

  // Propagate positions from the representatives along given maps.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [p, m] : usable) {
      auto [s, t] = p;
      if (!from_rep_[s].empty() && from_rep_[t].empty()) {
        for (int f : from_rep_[s]) from_rep_[t].push_back(m.at(f));
        changed = true;
      } else if (from_rep_[s].empty() && !from_rep_[t].empty()) {
        std::map<int, int> inv;
        for (auto [f, g] : m) inv[g] = f;
        for (int g : from_rep_[t]) from_rep_[s].push_back(inv.at(g));
        changed = true;
      }
    }
  }
  for (const auto& [p, m] : usable) {
    auto [s, t] = p;
    for (size_t i = 0; i < from_rep_[s].size(); ++i) {
      if (m.at(from_rep_[s][i]) != from_rep_[t][i]) {
        issues_.push_back("bijection " + pair_name(p) +
                          " conflicts with the composition of other bijections");
        break;
      }
    }
  }
  for (int d = 0; d < k; ++d) {
    if (!from_rep_[d].empty()) continue;
    // Unreached member: singleton blocks have only one bijection.
    if (space.block(d).size() != 1) {
      issues_.push_back("no bijection determines " +
                        pair_name({rep_[d], d}));
    }
    from_rep_[d] = space.block(d).elements();
  }

  position_.assign(space.feature_count(), -1);
  for (int d = 0; d < k; ++d) {
    for (size_t i = 0; i < from_rep_[d].size(); ++i) {
      position_[from_rep_[d][i]] = static_cast<int>(i);
    }
  }
}

DomainSet AnalogyStructure::classmates(int d) const {
  DomainSet out;
  for (int e = 0; e < domain_count(); ++e) {
    if (rep_[e] == rep_[d]) out |= DomainSet::Singleton(e);
  }
  return out;
}

std::vector<DomainSet> AnalogyStructure::classes() const {
  std::vector<DomainSet> out;
  for (int d = 0; d < domain_count(); ++d) {
    if (rep_[d] == d) out.push_back(classmates(d));
  }
  return out;
}

int AnalogyStructure::image(int s, int t, int f) const {
  if (!analogous(s, t) || domain_of_.at(f) != s) return -1;
  return from_rep_[t][position_[f]];
}

FeatureSet AnalogyStructure::apply(int s, int t, FeatureSet f) const {
  FeatureSet out;
  if (!analogous(s, t)) return out;
  f.for_each([&](int x) {
    if (domain_of_[x] == s) out |= FeatureSet::Singleton(from_rep_[t][position_[x]]);
  });
  return out;
}

}  // namespace elana

#include "elana/kappa.h"

#include "elana/error.h"

namespace elana {
namespace {

// Lowest-indexed analogous domain that has input, or -1.
int source_for(const AnalogyStructure& analogy, int d,
               const std::vector<bool>& has_input) {
  int best = -1;
  analogy.classmates(d).for_each([&](int e) {
    if (best < 0 && has_input[e]) best = e;
  });
  return best;
}

}  // namespace

KappaTable KappaTable::Tabular(const FeatureSpace& space,
                               const AnalogyStructure& analogy,
                               std::map<int, KappaEntries> tables) {
  KappaTable k;
  k.mode_ = Mode::kTabular;
  k.given_tables_ = std::move(tables);
  const int n = space.domain_count();
  k.tables_.assign(n, {});
  std::vector<bool> has_input(n, false);
  for (const auto& [d, entries] : k.given_tables_) {
    if (d < 0 || d >= n) {
      throw StructureError("kappa table for unknown domain " + std::to_string(d + 1));
    }
    has_input[d] = true;
    for (auto [from, to] : entries) {
      if (!from.subset_of(space.block(d)) || !space.consistent(from)) {
        k.issues_.push_back("kappa entry " + space.format(from) +
                            " is not a consistent subset of domain " +
                            std::to_string(d + 1));
        continue;
      }
      auto [it, inserted] = k.tables_[d].emplace(from, to);
      if (!inserted && it->second != to) {
        k.issues_.push_back("kappa entry " + space.format(from) +
                            " given twice with different values");
      }
    }
    k.tables_[d].emplace(FeatureSet(), FeatureSet());
  }
  for (int d = 0; d < n; ++d) {
    if (has_input[d]) continue;
    int s = source_for(analogy, d, has_input);
    if (s < 0) continue;  // incomplete; the validator reports missing entries
    for (auto [from, to] : k.tables_[s]) {
      k.tables_[d].emplace(analogy.apply(s, d, from), analogy.apply(s, d, to));
    }
  }
  return k;
}

KappaTable KappaTable::Additive(const FeatureSpace& space,
                                const AnalogyStructure& analogy,
                                std::map<int, FeatureSet> images) {
  KappaTable k;
  k.mode_ = Mode::kAdditive;
  k.given_images_ = std::move(images);
  const int nf = space.feature_count();
  std::vector<std::optional<FeatureSet>> image(nf);
  for (auto [f, img] : k.given_images_) {
    if (f < 0 || f >= nf) throw StructureError("kappa image for unknown feature");
    image[f] = img;
  }
  for (int f = 0; f < nf; ++f) {
    if (image[f]) continue;
    int d = space.domain_of(f);
    analogy.classmates(d).for_each([&](int e) {
      if (image[f] || e == d) return;
      int g = analogy.image(d, e, f);
      if (g >= 0 && k.given_images_.count(g)) {
        image[f] = analogy.apply(e, d, *image[g]);
      }
    });
  }
  k.tables_.assign(space.domain_count(), {});
  for (int d = 0; d < space.domain_count(); ++d) {
    for (FeatureSet from : space.consistent_in_domain(d)) {
      FeatureSet to;
      bool complete = true;
      from.for_each([&](int f) {
        if (image[f]) {
          to |= *image[f];
        } else {
          complete = false;
        }
      });
      if (complete) k.tables_[d].emplace(from, to);
    }
  }
  for (int f = 0; f < nf; ++f) {
    if (!image[f]) {
      k.issues_.push_back("no kappa image for feature '" + space.name(f) + "'");
    }
  }
  return k;
}

std::optional<FeatureSet> KappaTable::lookup(int domain, FeatureSet f) const {
  if (domain < 0 || domain >= static_cast<int>(tables_.size())) return std::nullopt;
  auto it = tables_[domain].find(f);
  if (it == tables_[domain].end()) return std::nullopt;
  return it->second;
}

FeatureSet KappaTable::apply(const FeatureSpace& space, FeatureSet f) const {
  if (!space.consistent(f)) return space.all();
  FeatureSet out;
  for (int d = 0; d < space.domain_count(); ++d) {
    FeatureSet part = f & space.block(d);
    auto v = lookup(d, part);
    if (!v) {
      throw EvaluationError("kappa has no entry for " + space.format(part) +
                            " in domain " + std::to_string(d + 1));
    }
    out |= *v;
  }
  return out;
}

}  // namespace elana

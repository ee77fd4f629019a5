#include "elana/translations.h"

#include <algorithm>

#include "elana/error.h"
#include "elana/evaluator.h"

namespace elana {

DomainTranslation::DomainTranslation(std::vector<DomainPair> pairs)
    : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  DomainSet src, tgt;
  for (auto [s, t] : pairs_) {
    if (s < 0 || t < 0 || s >= kMaxDomains || t >= kMaxDomains) {
      throw TranslationError("domain index out of range");
    }
    if (s == t) {
      throw TranslationError("identity pair (" + std::to_string(s + 1) + "," +
                             std::to_string(t + 1) + ") in a domain translation");
    }
    if (src.contains(s)) {
      throw TranslationError("source domain " + std::to_string(s + 1) + " repeated");
    }
    if (tgt.contains(t)) {
      throw TranslationError("target domain " + std::to_string(t + 1) + " repeated");
    }
    src |= DomainSet::Singleton(s);
    tgt |= DomainSet::Singleton(t);
  }
}

DomainSet DomainTranslation::sources() const {
  DomainSet out;
  for (auto [s, t] : pairs_) out |= DomainSet::Singleton(s);
  return out;
}

DomainSet DomainTranslation::targets() const {
  DomainSet out;
  for (auto [s, t] : pairs_) out |= DomainSet::Singleton(t);
  return out;
}

int DomainTranslation::target_of(int source) const {
  for (auto [s, t] : pairs_) {
    if (s == source) return t;
  }
  return -1;
}

std::string to_string(const DomainTranslation& u) {
  std::string out = "{";
  for (size_t i = 0; i < u.pairs().size(); ++i) {
    if (i) out += ",";
    out += "(" + std::to_string(u.pairs()[i].first + 1) + "," +
           std::to_string(u.pairs()[i].second + 1) + ")";
  }
  return out + "}";
}

bool valid_for(const AnalogyStructure& analogy, const DomainTranslation& u) {
  for (auto [s, t] : u.pairs()) {
    if (s >= analogy.domain_count() || t >= analogy.domain_count()) return false;
    if (!analogy.analogous(s, t)) return false;
  }
  return true;
}

FeatureSet apply(const FeatureSpace& space, const AnalogyStructure& analogy,
                 const DomainTranslation& u, FeatureSet f) {
  if (!f.subset_of(space.all())) throw TranslationError("feature outside the universe");
  if (!valid_for(analogy, u)) {
    throw TranslationError("translation " + to_string(u) + " uses non-analogous domains");
  }
  FeatureSet out = f;
  for (auto [s, t] : u.pairs()) out -= space.block(s);
  for (auto [s, t] : u.pairs()) out |= analogy.apply(s, t, f);
  return out;
}

FeatureSet apply(const Interpretation& interp, const DomainTranslation& u, FeatureSet f) {
  return apply(interp.space(), interp.analogy(), u, f);
}

DomainTranslation invert(const DomainTranslation& u) {
  std::vector<DomainPair> pairs;
  for (auto [s, t] : u.pairs()) pairs.emplace_back(t, s);
  return DomainTranslation(std::move(pairs));
}

DomainTranslation compose(const DomainTranslation& u, const DomainTranslation& v) {
  std::vector<DomainPair> out;
  DomainSet v_src = v.sources(), u_tgt = u.targets();
  for (auto [i, j] : u.pairs()) {
    int k = v.target_of(j);
    if (k >= 0 && i != k) out.emplace_back(i, k);
    if (!v_src.contains(j)) out.emplace_back(i, j);
  }
  for (auto [j, k] : v.pairs()) {
    if (!u_tgt.contains(j)) out.emplace_back(j, k);
  }
  return DomainTranslation(std::move(out));
}

namespace {

struct MuSearch {
  const FeatureSpace& space;
  const AnalogyStructure& analogy;
  FeatureSet c, d;
  DomainSet delta_c;
  std::vector<int> sources;
  std::vector<DomainPair> chosen;
  DomainSet used_targets;
  std::vector<DomainTranslation> out;

  void run(size_t idx, FeatureSet image) {
    if (idx == sources.size()) {
      if (image != d) return;
      DomainSet src;
      for (auto [s, t] : chosen) src |= DomainSet::Singleton(s);
      if (used_targets.intersects(delta_c - src)) return;
      out.emplace_back(chosen);
      return;
    }
    const int s = sources[idx];
    const FeatureSet part = c & space.block(s);
    if (part.subset_of(d)) run(idx + 1, image | part);
    analogy.classmates(s).for_each([&](int t) {
      if (t == s || used_targets.contains(t)) return;
      FeatureSet moved = analogy.apply(s, t, part);
      if (!moved.subset_of(d)) return;
      chosen.emplace_back(s, t);
      used_targets |= DomainSet::Singleton(t);
      run(idx + 1, image | moved);
      used_targets -= DomainSet::Singleton(t);
      chosen.pop_back();
    });
  }
};

void require_natural(const Interpretation& interp, const AnalogyAssertion& a,
                     const Signature* extra) {
  for (const Concept& t : a.terms) {
    bool natural = interp.signature().is_natural(t);
    if (!natural && extra) {
      Signature merged = interp.signature();
      merged.merge(*extra);
      natural = merged.is_natural(t);
    }
    if (!natural) {
      throw EvaluationError("analogy assertion over non-natural concept " + to_sexpr(t));
    }
  }
}

}  // namespace

std::vector<DomainTranslation> mu_of_sets(const FeatureSpace& space,
                                          const AnalogyStructure& analogy,
                                          FeatureSet phi_c, FeatureSet phi_d) {
  MuSearch search{space, analogy, phi_c, phi_d, space.domains_of(phi_c), {}, {}, {}, {}};
  search.sources = search.delta_c.elements();
  search.run(0, FeatureSet());
  std::sort(search.out.begin(), search.out.end());
  return search.out;
}

std::vector<DomainTranslation> mu(const Interpretation& interp, const Concept& c,
                                  const Concept& d, const Signature* extra) {
  return mu_of_sets(interp.space(), interp.analogy(), phi(interp, c, extra),
                    phi(interp, d, extra));
}

bool satisfies_ana(const Interpretation& interp, const AnalogyAssertion& a,
                   const Signature* extra) {
  return satisfies_ana(interp, a, a.strength, extra);
}

bool satisfies_ana(const Interpretation& interp, const AnalogyAssertion& a,
                   Strength strength, const Signature* extra) {
  require_natural(interp, a, extra);
  auto left = mu(interp, a.terms[0], a.terms[1], extra);
  auto right = mu(interp, a.terms[2], a.terms[3], extra);
  bool shared = false;
  for (const auto& u : left) {
    if (std::binary_search(right.begin(), right.end(), u)) {
      shared = true;
      break;
    }
  }
  if (strength == Strength::kStandard) return shared;
  return shared && left == right;
}

}  // namespace elana

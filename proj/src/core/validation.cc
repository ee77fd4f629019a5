#include "elana/validation.h"

#include <algorithm>

#include "elana/evaluator.h"

namespace elana {
namespace {

std::string pair_text(int s, int t) {
  return "(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
}

void check_individuals(const Interpretation& interp, ValidityReport& report) {
  const FeatureSpace& space = interp.space();
  for (const Individual& ind : interp.individuals()) {
    for (FeatureSet x : space.forbidden()) {
      if (x.subset_of(ind.features)) {
        report.violations.push_back(
            {"forbidden-combination", "individual '" + ind.name + "' has a forbidden combination",
             ind.name + " ⊇ " + space.format(x)});
        break;
      }
    }
  }
}

void check_bijections(const Interpretation& interp, ValidityReport& report) {
  const FeatureSpace& space = interp.space();
  const AnalogyStructure& an = interp.analogy();
  for (const std::string& issue : an.issues()) {
    report.violations.push_back({"bijection-coherence", issue, ""});
  }
  const int k = space.domain_count();
  for (int s = 0; s < k; ++s) {
    for (int t = 0; t < k; ++t) {
      if (!an.analogous(s, t)) continue;
      bool ok = true;
      space.block(s).for_each([&](int f) {
        int g = an.image(s, t, f);
        if (g < 0 || an.image(t, s, g) != f) ok = false;
        if (s == t && g != f) ok = false;
      });
      if (!ok) {
        report.violations.push_back(
            {"bijection-coherence", "bijection " + pair_text(s, t) + " is not inverse-coherent",
             pair_text(s, t)});
        continue;
      }
      for (int u = 0; u < k; ++u) {
        if (!an.analogous(t, u)) continue;
        bool comp = true;
        space.block(s).for_each([&](int f) {
          if (an.image(t, u, an.image(s, t, f)) != an.image(s, u, f)) comp = false;
        });
        if (!comp) {
          report.violations.push_back(
              {"bijection-coherence",
               "bijections do not compose along " + pair_text(s, t) + "," + pair_text(t, u),
               pair_text(s, u)});
        }
      }
    }
  }
}

void check_closed_images(const Interpretation& interp, ValidityReport& report) {
  const FeatureSpace& space = interp.space();
  const AnalogyStructure& an = interp.analogy();
  for (int i = 0; i < space.domain_count(); ++i) {
    DomainSet mates = an.classmates(i) - DomainSet::Singleton(i);
    if (mates.empty()) continue;
    for (FeatureSet f : space.consistent_in_domain(i)) {
      mates.for_each([&](int j) {
        FeatureSet img = an.apply(i, j, f);
        if (!space.consistent(img)) {
          report.violations.push_back(
              {"closed-images",
               "image of consistent " + space.format(f) + " under " + pair_text(i, j) +
                   " is inconsistent",
               space.format(f) + " -> " + space.format(img)});
        }
      });
    }
  }
}

void check_analogous_exclusion(const Interpretation& interp, ValidityReport& report) {
  const FeatureSpace& space = interp.space();
  const AnalogyStructure& an = interp.analogy();
  for (int i = 0; i < space.domain_count(); ++i) {
    for (int j = i + 1; j < space.domain_count(); ++j) {
      if (!an.analogous(i, j)) continue;
      space.block(i).for_each([&](int f) {
        space.block(j).for_each([&](int g) {
          FeatureSet pair = FeatureSet::Singleton(f) | FeatureSet::Singleton(g);
          if (!space.forbidden_contains(pair)) {
            report.violations.push_back(
                {"analogous-exclusion",
                 "features of analogous domains " + pair_text(i, j) +
                     " are not mutually exclusive",
                 "(" + space.name(f) + ", " + space.name(g) + ")"});
          }
        });
      });
    }
  }
}

void check_natural_atoms(const Interpretation& interp, ValidityReport& report) {
  const FeatureSpace& space = interp.space();
  for (const auto& [name, features] : interp.natural_atoms()) {
    IndividualSet members = up_set(interp, features);
    FeatureSet common = phi_of(interp, members);
    if (up_set(interp, common) != members) {
      report.violations.push_back(
          {"natural-extension", "natural atom '" + name + "' is not characterized by its features",
           name});
    }
    if (!space.consistent(features)) {
      report.notes.push_back("natural atom '" + name + "' has inconsistent features " +
                             space.format(features) + " (empty extension)");
    }
  }
  for (const auto& [name, members] : interp.plain_atoms()) {
    if (interp.natural_atoms().count(name)) {
      report.violations.push_back(
          {"vocabulary", "atom '" + name + "' is both natural and plain", name});
    }
  }
}

}  // namespace

bool ValidityReport::has(const std::string& condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.condition == condition; });
}

void validate_kappa(const Interpretation& interp, const std::string& role,
                    const KappaTable& kappa, ValidityReport& report) {
  const FeatureSpace& space = interp.space();
  const AnalogyStructure& an = interp.analogy();
  const std::string tag = "kappa[" + role + "]: ";
  for (const std::string& issue : kappa.issues()) {
    report.violations.push_back({"kappa-table", tag + issue, role});
  }
  for (int i = 0; i < space.domain_count(); ++i) {
    for (FeatureSet f : space.consistent_in_domain(i)) {
      auto v = kappa.lookup(i, f);
      if (!v) {
        report.violations.push_back(
            {"kappa-table", tag + "no entry for " + space.format(f) + " in domain " +
                           std::to_string(i + 1),
             space.format(f)});
        continue;
      }
      if (!v->subset_of(space.block(i))) {
        report.violations.push_back(
            {"kappa-domain", tag + "image of " + space.format(f) + " leaves domain " +
                           std::to_string(i + 1),
             space.format(f) + " -> " + space.format(*v)});
      }
      if (!f.empty() && v->empty()) {
        report.violations.push_back(
            {"kappa-nonempty", tag + "nonempty " + space.format(f) + " has an empty image",
             space.format(f)});
      }
      if (f.empty() && !v->empty()) {
        report.violations.push_back(
            {"kappa-domain", tag + "image of the empty set is not empty", space.format(*v)});
      }
      (an.classmates(i) - DomainSet::Singleton(i)).for_each([&](int j) {
        FeatureSet moved = an.apply(i, j, f);
        auto w = kappa.lookup(j, moved);
        FeatureSet expect = an.apply(i, j, *v);
        if (w && *w != expect) {
          report.violations.push_back(
              {"kappa-commutes", tag + "does not commute with " + pair_text(i, j) + " on " +
                             space.format(f),
               space.format(moved) + " -> " + space.format(*w) + ", expected " +
                   space.format(expect)});
        }
      });
    }
    for (const auto& [from, to] : kappa.tables()[i]) {
      if (!from.subset_of(space.block(i)) || !space.consistent(from)) {
        report.violations.push_back(
            {"kappa-table", tag + "entry " + space.format(from) + " is not in domain " +
                           std::to_string(i + 1),
             space.format(from)});
      }
    }
  }
}

ValidityReport validate_interpretation(const Interpretation& interp) {
  ValidityReport report;
  if (interp.space().all_inserted()) {
    report.notes.push_back("the full feature set was added to the forbidden sets");
  }
  check_individuals(interp, report);
  check_bijections(interp, report);
  check_closed_images(interp, report);
  if (interp.mode() == Mode::kStrong) check_analogous_exclusion(interp, report);
  check_natural_atoms(interp, report);
  for (const auto& [role, kappa] : interp.kappas()) {
    validate_kappa(interp, role, kappa, report);
  }
  return report;
}

}  // namespace elana

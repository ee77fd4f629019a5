#include "elana/oracle/generator.h"

#include <algorithm>
#include <set>

#include "elana/error.h"
#include "elana/validation.h"

namespace elana::oracle {

uint64_t Rng::below(uint64_t n) {
  if (n <= 1) return 0;
  const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % n);
  uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % n;
}

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
  uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

DomainTranslation random_translation(const AnalogyStructure& analogy, DomainSet sources,
                                     Rng& rng, double map_probability) {
  std::vector<DomainPair> pairs;
  DomainSet used;
  for (int s : sources.elements()) {
    if (!rng.chance(map_probability)) continue;
    std::vector<int> options;
    for (int t : analogy.classmates(s).elements()) {
      if (t != s && !used.contains(t)) options.push_back(t);
    }
    if (options.empty()) continue;
    int t = rng.pick(options);
    used |= DomainSet::Singleton(t);
    pairs.emplace_back(s, t);
  }
  return DomainTranslation(std::move(pairs));
}

namespace {

FeatureSet random_nonempty(const std::vector<FeatureSet>& family, Rng& rng) {
  std::vector<FeatureSet> options;
  for (FeatureSet f : family) {
    if (!f.empty()) options.push_back(f);
  }
  if (options.empty()) return {};
  return rng.pick(options);
}

Interpretation attempt(const GeneratorParams& p, Rng& rng) {
  const int max_features = std::max(1, p.max_features);
  const int max_domains = std::max(1, p.max_domains);
  const bool exclusive = p.mode == Mode::kStrong || p.exclusion_pairs.value_or(false);

  // Block sizes, grouped by size so that groups can be made analogous.
  const int target = rng.between(std::min(2, max_features), max_features);
  std::vector<int> sizes;
  std::vector<std::vector<int>> groups;
  int remaining = target;
  while (remaining > 0) {
    int slots = max_domains - static_cast<int>(sizes.size());
    if (slots == 1) {
      groups.push_back({static_cast<int>(sizes.size())});
      sizes.push_back(remaining);
      break;
    }
    int s = rng.between(1, std::min(3, remaining));
    const int cap = std::min(slots - 1, remaining / s);
    int g = cap >= 2 && rng.chance(p.analogy_probability) ? rng.between(2, cap)
                                                           : rng.between(1, cap);
    std::vector<int> group;
    for (int i = 0; i < g; ++i) {
      group.push_back(static_cast<int>(sizes.size()));
      sizes.push_back(s);
    }
    groups.push_back(group);
    remaining -= g * s;
  }

  std::vector<std::string> names;
  std::vector<FeatureSet> blocks;
  for (size_t d = 0; d < sizes.size(); ++d) {
    FeatureSet block;
    for (int i = 0; i < sizes[d]; ++i) {
      block |= FeatureSet::Singleton(static_cast<int>(names.size()));
      names.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(d + 1));
    }
    blocks.push_back(block);
  }

  // Analogy classes inside each group, with random bijections from the
  // class representative.
  std::vector<DomainPair> generators;
  std::map<DomainPair, FeatureMap> bijections;
  std::vector<std::vector<int>> classes;
  for (const auto& group : groups) {
    std::vector<std::vector<int>> local;
    for (int d : group) {
      if (!local.empty() && rng.chance(p.analogy_probability)) {
        local[rng.below(local.size())].push_back(d);
      } else {
        local.push_back({d});
      }
    }
    for (auto& cls : local) {
      std::sort(cls.begin(), cls.end());
      std::vector<int> rep = blocks[cls[0]].elements();
      for (size_t m = 1; m < cls.size(); ++m) {
        std::vector<int> target_features = blocks[cls[m]].elements();
        rng.shuffle(target_features);
        FeatureMap map;
        for (size_t i = 0; i < rep.size(); ++i) map[rep[i]] = target_features[i];
        generators.emplace_back(cls[0], cls[m]);
        bijections[{cls[0], cls[m]}] = std::move(map);
      }
      classes.push_back(cls);
    }
  }
  std::sort(classes.begin(), classes.end());

  FeatureSpace bare(names, blocks, {});
  AnalogyStructure bare_analogy(bare, generators, bijections);

  std::vector<FeatureSet> forbidden;
  std::set<int> reps_with_intra;
  for (const auto& cls : classes) {
    if (exclusive) {
      for (size_t i = 0; i < cls.size(); ++i) {
        for (size_t j = i + 1; j < cls.size(); ++j) {
          for (int f : blocks[cls[i]].elements()) {
            for (int g : blocks[cls[j]].elements()) {
              forbidden.push_back(FeatureSet::Singleton(f) | FeatureSet::Singleton(g));
            }
          }
        }
      }
    }
    std::vector<int> rep = blocks[cls[0]].elements();
    if (rep.size() >= 2 && rng.chance(p.intra_forbidden_probability)) {
      rng.shuffle(rep);
      int size = rng.between(2, static_cast<int>(rep.size()));
      FeatureSet x;
      for (int i = 0; i < size; ++i) x |= FeatureSet::Singleton(rep[i]);
      for (int d : cls) forbidden.push_back(bare_analogy.apply(cls[0], d, x));
      reps_with_intra.insert(cls[0]);
    }
  }
  for (int i = 0; i < p.cross_domain_forbidden; ++i) {
    std::vector<DomainPair> candidates;
    for (size_t a = 0; a < blocks.size(); ++a) {
      for (size_t b = a + 1; b < blocks.size(); ++b) {
        if (!bare_analogy.analogous(a, b)) candidates.emplace_back(a, b);
      }
    }
    if (candidates.empty()) break;
    auto [a, b] = rng.pick(candidates);
    int f = rng.pick(blocks[a].elements());
    int g = rng.pick(blocks[b].elements());
    forbidden.push_back(FeatureSet::Singleton(f) | FeatureSet::Singleton(g));
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());

  FeatureSpace space(names, blocks, forbidden);
  AnalogyStructure analogy(space, generators, bijections);
  Interpretation interp(space, analogy, p.mode);

  const std::vector<FeatureSet> family = space.consistent_family();
  std::vector<FeatureSet> atoms;
  for (int i = 0; i < p.natural_atoms; ++i) {
    FeatureSet value;
    bool chosen = false;
    if (!atoms.empty() && rng.chance(p.translated_atom_probability)) {
      FeatureSet base = rng.pick(atoms);
      DomainTranslation u = random_translation(analogy, space.domains_of(base), rng);
      FeatureSet image = apply(space, analogy, u, base);
      if (space.consistent(image)) {
        value = image;
        chosen = true;
      }
    }
    if (!chosen && rng.chance(0.4)) {
      int d = static_cast<int>(rng.below(space.domain_count()));
      value = random_nonempty(space.consistent_in_domain(d), rng);
      chosen = true;
    }
    if (!chosen) value = rng.pick(family);
    atoms.push_back(value);
    interp.set_natural_atom("N" + std::to_string(i), value);
  }

  for (int r = 0; r < p.intra_roles; ++r) {
    bool additive = !rng.chance(p.tabular_kappa_probability) && space.domain_count() > 1;
    for (const auto& cls : classes) {
      if (reps_with_intra.count(cls[0])) additive = false;
    }
    std::string role = "r" + std::to_string(r);
    if (additive) {
      std::map<int, FeatureSet> images;
      for (const auto& cls : classes) {
        auto options = space.consistent_in_domain(cls[0]);
        for (int f : blocks[cls[0]].elements()) images[f] = random_nonempty(options, rng);
      }
      interp.set_kappa(role, KappaTable::Additive(space, analogy, std::move(images)));
    } else {
      std::map<int, KappaEntries> tables;
      for (const auto& cls : classes) {
        auto options = space.consistent_in_domain(cls[0]);
        KappaEntries entries;
        for (FeatureSet f : options) {
          if (f.empty()) continue;
          entries.emplace_back(f, random_nonempty(options, rng));
        }
        tables[cls[0]] = std::move(entries);
      }
      interp.set_kappa(role, KappaTable::Tabular(space, analogy, std::move(tables)));
    }
  }
  return interp;
}

}  // namespace

Interpretation gen_interpretation(const GeneratorParams& params, uint64_t seed) {
  if (params.max_features > kGeneratorFeatureCap) {
    throw Error("generator: max_features " + std::to_string(params.max_features) +
                " exceeds the cap of " + std::to_string(kGeneratorFeatureCap));
  }
  if (params.max_features < 1 || params.max_domains < 1) {
    throw Error("generator: max_features and max_domains must be positive");
  }
  std::string last;
  for (int i = 0; i < std::max(1, params.repair_attempts); ++i) {
    Rng rng(mix_seed(seed, i));
    Interpretation interp = attempt(params, rng);
    ValidityReport report = validate_interpretation(interp);
    if (report.valid()) return interp;
    last = report.violations.front().condition + ": " + report.violations.front().message;
  }
  throw Error("generator: no valid structure for seed " + std::to_string(seed) + " (" + last +
              ")");
}

}  // namespace elana::oracle

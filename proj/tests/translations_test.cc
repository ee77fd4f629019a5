#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "brute.h"
#include "data.h"
#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/oracle/generator.h"
#include "elana/oracle/naive.h"
#include "elana/translations.h"

using namespace elana;
using testdata::concept_of;

namespace {

DomainTranslation tr(std::vector<DomainPair> pairs) { return DomainTranslation(std::move(pairs)); }

bool contains(const std::vector<DomainTranslation>& set, const DomainTranslation& u) {
  return std::find(set.begin(), set.end(), u) != set.end();
}

std::vector<Concept> natural_atoms(const Interpretation& interp) {
  std::vector<Concept> out;
  for (const auto& [name, f] : interp.natural_atoms()) out.push_back(Concept::Atom(name));
  return out;
}

}  // namespace

TEST(DomainTranslation, Construction) {
  EXPECT_THROW(tr({{0, 1}, {0, 2}}), TranslationError);
  EXPECT_THROW(tr({{0, 2}, {1, 2}}), TranslationError);
  EXPECT_THROW(tr({{1, 1}}), TranslationError);
  DomainTranslation u = tr({{2, 3}, {0, 1}});
  EXPECT_EQ(to_string(u), "{(1,2),(3,4)}");
  EXPECT_EQ(u.sources(), DomainSet::Singleton(0) | DomainSet::Singleton(2));
  EXPECT_EQ(u.target_of(2), 3);
  EXPECT_EQ(u.target_of(1), -1);
}

TEST(Apply, Examples) {
  auto zoo = testdata::zoo();
  FeatureSet yc = testdata::features(zoo, {"y", "c"});
  EXPECT_EQ(apply(zoo, DomainTranslation(), yc), yc);
  EXPECT_EQ(apply(zoo, tr({{0, 1}, {2, 3}}), yc), testdata::features(zoo, {"a", "c'"}));
  auto spec = testdata::spec();
  EXPECT_EQ(apply(spec, tr({{0, 1}}), testdata::features(spec, {"pr", "sw"})),
            testdata::features(spec, {"pl", "bd"}));
  EXPECT_THROW(apply(zoo, tr({{0, 2}}), yc), TranslationError);
}

TEST(Apply, MatchesExplicitFeatureMap) {
  auto zoo = testdata::zoo();
  const auto& s = zoo.space();
  std::map<int, int> map = {{s.index("c"), s.index("c'")},
                            {s.index("d"), s.index("d'")},
                            {s.index("y"), s.index("a")}};
  for (FeatureSet f : s.consistent_family()) {
    EXPECT_EQ(apply(zoo, tr({{0, 1}, {2, 3}}), f).bits(), brute::image(f.bits(), map));
  }
}

TEST(Invert, Examples) {
  EXPECT_EQ(invert(DomainTranslation()), DomainTranslation());
  EXPECT_EQ(invert(tr({{0, 1}, {2, 3}})), tr({{1, 0}, {3, 2}}));
}

TEST(Compose, Examples) {
  DomainTranslation v = tr({{1, 2}});
  EXPECT_EQ(compose(DomainTranslation(), v), v);
  EXPECT_EQ(compose(tr({{0, 1}}), tr({{1, 0}})), DomainTranslation());
  EXPECT_EQ(compose(tr({{0, 1}}), tr({{1, 2}})), tr({{0, 2}}));
  EXPECT_EQ(compose(tr({{0, 1}}), tr({{2, 3}})), tr({{0, 1}, {2, 3}}));
  EXPECT_THROW(compose(tr({{0, 1}}), tr({{2, 1}})), TranslationError);
}

TEST(Mu, Zoo) {
  auto zoo = testdata::zoo();
  Concept cat = concept_of("Cat"), wildcat = concept_of("WildCat");
  EXPECT_EQ(mu(zoo, cat, wildcat), std::vector<DomainTranslation>{tr({{0, 1}})});
  EXPECT_EQ(mu(zoo, wildcat, cat), std::vector<DomainTranslation>{tr({{1, 0}})});
  for (const char* text : {"Cat", "(and Young Dog)", "top", "bot"}) {
    EXPECT_TRUE(contains(mu(zoo, concept_of(text), concept_of(text)), DomainTranslation())) << text;
  }
  EXPECT_EQ(mu(zoo, concept_of("(and Young Cat)"), concept_of("(and Adult WildCat)")),
            std::vector<DomainTranslation>{tr({{0, 1}, {2, 3}})});
  EXPECT_TRUE(mu(zoo, cat, concept_of("Young")).empty());
}

TEST(Mu, ReversibilityExcludesOverlap) {
  // φ(C) = {f1,g2}, φ(D) = {g1,g2}: mapping domain 1 onto 2 collides with
  // the untranslated g2.
  FeatureSpace space({"f1", "f2", "g1", "g2"},
                     std::vector<std::vector<std::string>>{{"f1", "f2"}, {"g1", "g2"}}, {});
  AnalogyStructure analogy(space, {{0, 1}}, {{{0, 1}, {{0, 2}, {1, 3}}}});
  Interpretation weak(space, analogy, Mode::kWeak);
  weak.set_natural_atom("C", space.make_set({"f1", "g2"}));
  weak.set_natural_atom("D", space.make_set({"g1", "g2"}));
  EXPECT_TRUE(mu(weak, Concept::Atom("C"), Concept::Atom("D")).empty());
  EXPECT_EQ(apply(weak, tr({{0, 1}}), space.make_set({"f1", "g2"})), space.make_set({"g1", "g2"}));
}

TEST(Ana, Zoo) {
  auto zoo = testdata::zoo();
  auto ana = [&](const char* c1, const char* c2, const char* d1, const char* d2) {
    return satisfies_ana(zoo, make_ana(concept_of(c1), concept_of(c2), concept_of(d1),
                                       concept_of(d2)));
  };
  EXPECT_TRUE(ana("Cat", "Cat", "Wolf", "Wolf"));
  EXPECT_TRUE(ana("Cat", "WildCat", "Dog", "Wolf"));
  EXPECT_TRUE(ana("WildCat", "Cat", "Wolf", "Dog"));
  EXPECT_FALSE(ana("Cat", "WildCat", "Wolf", "Dog"));
  EXPECT_THROW(satisfies_ana(zoo, make_ana(concept_of("Cat"), concept_of("Pet"),
                                           concept_of("Cat"), concept_of("Cat"))),
               EvaluationError);
}

TEST(Ana, ExchangeOfMeansFails) {
  auto zoo = testdata::zoo();
  Concept a = concept_of("Cat"), b = concept_of("WildCat");
  Concept c = concept_of("(and Young Cat)"), d = concept_of("(and Young WildCat)");
  EXPECT_TRUE(satisfies_ana(zoo, make_ana(a, b, c, d)));
  EXPECT_FALSE(satisfies_ana(zoo, make_ana(a, c, b, d)));
}

// Properties over generated structures.

TEST(MuProperties, AgreesWithNaiveEnumeration) {
  for (Mode mode : {Mode::kStrong, Mode::kWeak}) {
    for (uint64_t seed = 0; seed < 200; ++seed) {
      Interpretation interp = oracle::gen_interpretation(testdata::small_params(mode), seed);
      auto atoms = natural_atoms(interp);
      for (const Concept& c : atoms) {
        for (const Concept& d : atoms) {
          ASSERT_EQ(mu(interp, c, d), oracle::naive_mu(interp.space(), interp.analogy(),
                                                       phi(interp, c), phi(interp, d)))
              << to_string(mode) << " seed " << seed;
        }
      }
    }
  }
}

TEST(MuProperties, InversionCompositionUniqueness) {
  int compositions = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    Interpretation interp = oracle::gen_interpretation(testdata::small_params(Mode::kStrong), seed);
    auto atoms = natural_atoms(interp);
    std::map<std::pair<int, int>, std::vector<DomainTranslation>> table;
    for (size_t i = 0; i < atoms.size(); ++i) {
      for (size_t j = 0; j < atoms.size(); ++j) table[{i, j}] = mu(interp, atoms[i], atoms[j]);
    }
    for (size_t i = 0; i < atoms.size(); ++i) {
      for (size_t j = 0; j < atoms.size(); ++j) {
        const auto& m = table[{i, j}];
        FeatureSet pc = phi(interp, atoms[i]);
        for (const auto& u : m) {
          EXPECT_EQ(apply(interp, invert(u), apply(interp, u, pc)), pc);
          EXPECT_TRUE(contains(table[{j, i}], invert(u))) << "seed " << seed;
        }
        if (!m.empty() && !is_empty(interp, atoms[i]) && !is_empty(interp, atoms[j])) {
          EXPECT_EQ(m.size(), 1u) << "seed " << seed;
        }
        for (size_t k = 0; k < atoms.size(); ++k) {
          const auto& n = table[{j, k}];
          if (m.empty() || n.empty()) continue;
          std::set<DomainTranslation> composed;
          for (const auto& u : m) {
            for (const auto& v : n) composed.insert(compose(u, v));
          }
          const auto& direct = table[{i, k}];
          EXPECT_EQ(composed, std::set<DomainTranslation>(direct.begin(), direct.end()))
              << "seed " << seed;
          ++compositions;
        }
      }
    }
  }
  EXPECT_GT(compositions, 100);
}

TEST(MuProperties, AssertionSymmetry) {
  for (Mode mode : {Mode::kStrong, Mode::kWeak}) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      Interpretation interp = oracle::gen_interpretation(testdata::small_params(mode), seed);
      auto atoms = natural_atoms(interp);
      oracle::Rng rng(seed);
      for (int t = 0; t < 20; ++t) {
        Concept c1 = rng.pick(atoms), c2 = rng.pick(atoms), d1 = rng.pick(atoms),
                d2 = rng.pick(atoms);
        for (Strength s : {Strength::kStandard, Strength::kStrong}) {
          EXPECT_EQ(satisfies_ana(interp, make_ana(c1, c2, d1, d2, s)),
                    satisfies_ana(interp, make_ana(c2, c1, d2, d1, s)));
        }
      }
    }
  }
}

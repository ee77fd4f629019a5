#include <gtest/gtest.h>

#include <algorithm>

#include "brute.h"
#include "data.h"
#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/oracle/generator.h"
#include "elana/validation.h"

using namespace elana;
using testdata::concept_of;

namespace {

std::vector<uint64_t> forbidden_bits(const FeatureSpace& space) {
  std::vector<uint64_t> out;
  for (FeatureSet x : space.forbidden()) out.push_back(x.bits());
  return out;
}

// Feature sets of the members, sorted.
std::vector<uint64_t> member_features(const Interpretation& interp, const IndividualSet& s) {
  std::vector<uint64_t> out;
  for (size_t i = s.find_first(); i != IndividualSet::npos; i = s.find_next(i)) {
    out.push_back(interp.individuals()[i].features.bits());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Interpretation rebuild(const Interpretation& interp, std::vector<FeatureSet> forbidden,
                       Mode mode) {
  FeatureSpace space = interp.space().with_forbidden(std::move(forbidden));
  AnalogyStructure analogy(space, interp.analogy().generators(),
                           interp.analogy().given_bijections());
  Interpretation out(space, analogy, mode);
  for (const auto& [name, f] : interp.natural_atoms()) out.set_natural_atom(name, f);
  return out;
}

}  // namespace

TEST(FeatureSpace, TrivialConsistency) {
  FeatureSpace space({"f", "g"}, std::vector<std::vector<std::string>>{{"f"}, {"g"}}, {});
  EXPECT_TRUE(space.all_inserted());
  EXPECT_TRUE(space.consistent(FeatureSet()));
  EXPECT_FALSE(space.consistent(space.all()));
  EXPECT_TRUE(space.consistent(FeatureSet::Singleton(0)));
}

TEST(FeatureSpace, RejectsBadPartitions) {
  using Names = std::vector<std::vector<std::string>>;
  EXPECT_THROW(FeatureSpace({"f", "g"}, Names{{"f"}}, {}), StructureError);
  EXPECT_THROW(FeatureSpace({"f", "g"}, Names{{"f", "g"}, {"g"}}, {}), StructureError);
  EXPECT_THROW(FeatureSpace({"f", "f"}, Names{{"f"}}, {}), StructureError);
  EXPECT_THROW(FeatureSpace({"f"}, Names{{"f"}}, Names{{"h"}}), StructureError);
}

TEST(FeatureSpace, UnknownFeatureName) {
  auto zoo = testdata::zoo();
  EXPECT_THROW(zoo.space().make_set({"c", "nope"}), StructureError);
}

TEST(FeatureSpace, ConsistentFamilyMatchesBruteForce) {
  auto zoo = testdata::zoo();
  const auto& space = zoo.space();
  std::vector<uint64_t> expected = brute::consistent(space.feature_count(), forbidden_bits(space));
  std::vector<uint64_t> actual;
  for (FeatureSet f : space.consistent_family()) actual.push_back(f.bits());
  EXPECT_EQ(actual, expected);
  EXPECT_FALSE(space.consistent(testdata::features(zoo, {"c", "c'"})));
}

TEST(Zoo, PhiValues) {
  auto zoo = testdata::zoo();
  EXPECT_EQ(phi(zoo, Concept::Top()), FeatureSet());
  EXPECT_EQ(phi(zoo, Concept::Bottom()), zoo.space().all());
  EXPECT_EQ(phi(zoo, concept_of("Cat")), testdata::features(zoo, {"c"}));
  EXPECT_EQ(phi(zoo, concept_of("(and Young Cat)")), testdata::features(zoo, {"y", "c"}));
}

TEST(Zoo, PhiMatchesBruteIntersection) {
  auto zoo = testdata::zoo();
  const int n = zoo.space().feature_count();
  auto family = brute::consistent(n, forbidden_bits(zoo.space()));
  for (const char* text : {"Cat", "Wolf", "(and Young Cat)", "(and Cat Dog)", "(and Adult Wolf)",
                           "(btw Cat Dog)", "(and Cat WildCat)"}) {
    Concept c = concept_of(text);
    std::set<std::string> atoms;
    collect_atoms(c, atoms);
    uint64_t need = 0;
    for (const auto& a : atoms) need |= zoo.natural_atoms().at(a).bits();
    uint64_t expected = brute::meet(n, brute::up(family, need));
    if (c.is(Concept::Kind::kBetween)) {
      uint64_t l = zoo.natural_atoms().at(c.left().name()).bits();
      uint64_t r = zoo.natural_atoms().at(c.right().name()).bits();
      expected = brute::meet(n, brute::up(family, l & r));
    }
    EXPECT_EQ(phi(zoo, c).bits(), expected) << text;
  }
}

TEST(Zoo, Extensions) {
  auto zoo = testdata::zoo();
  auto family = brute::consistent(zoo.space().feature_count(), forbidden_bits(zoo.space()));
  EXPECT_TRUE(extension(zoo, Concept::Bottom()).none());
  EXPECT_TRUE(extension(zoo, Concept::Top()).all());
  uint64_t yc = testdata::features(zoo, {"y", "c"}).bits();
  EXPECT_EQ(member_features(zoo, extension(zoo, concept_of("(and Young Cat)"))),
            brute::up(family, yc));
}

TEST(Spec, ExistentialExtension) {
  auto spec = testdata::spec();
  auto family = brute::consistent(spec.space().feature_count(), forbidden_bits(spec.space()));
  uint64_t pr = testdata::features(spec, {"pr"}).bits();
  EXPECT_EQ(member_features(spec, extension(spec, concept_of("(some specifies Software)"))),
            brute::up(family, pr));
}

TEST(Zoo, Delta) {
  auto zoo = testdata::zoo();
  EXPECT_EQ(delta(zoo, Concept::Top()), DomainSet());
  EXPECT_EQ(delta(zoo, concept_of("Cat")), DomainSet::Singleton(0));
  EXPECT_EQ(delta(zoo, concept_of("(and Young Cat)")),
            DomainSet::Singleton(0) | DomainSet::Singleton(2));
}

TEST(Zoo, UnknownVocabulary) {
  auto zoo = testdata::zoo();
  EXPECT_THROW(extension(zoo, concept_of("Unicorn")), EvaluationError);
  EXPECT_THROW(extension(zoo, concept_of("(some eats Cat)")), EvaluationError);
}

TEST(Validation, FixturesAreValid) {
  EXPECT_TRUE(validate_interpretation(testdata::zoo()).valid());
  EXPECT_TRUE(validate_interpretation(testdata::spec()).valid());
}

TEST(Validation, MutualExclusionOfAnalogousDomains) {
  auto zoo = testdata::zoo();
  FeatureSet cc = testdata::features(zoo, {"c", "c'"});
  std::vector<FeatureSet> forbidden;
  for (FeatureSet x : zoo.space().forbidden()) {
    if (x != cc) forbidden.push_back(x);
  }
  ValidityReport strong = validate_interpretation(rebuild(zoo, forbidden, Mode::kStrong));
  ASSERT_TRUE(strong.has("analogous-exclusion"));
  bool witnessed = false;
  for (const auto& v : strong.violations) {
    if (v.condition == "analogous-exclusion" && v.witness == "(c, c')") witnessed = true;
  }
  EXPECT_TRUE(witnessed);
  EXPECT_TRUE(validate_interpretation(rebuild(zoo, forbidden, Mode::kWeak)).valid());
}

TEST(Validation, ForbiddenImageMissing) {
  // {c,d} forbidden in domain 1 but its image {c',d'} allowed in domain 2.
  auto zoo = testdata::zoo();
  auto forbidden = zoo.space().forbidden();
  forbidden.push_back(testdata::features(zoo, {"c", "d"}));
  EXPECT_TRUE(validate_interpretation(rebuild(zoo, forbidden, Mode::kStrong)).has("closed-images"));
}

TEST(Satisfaction, Inclusions) {
  auto zoo = testdata::zoo();
  EXPECT_TRUE(satisfies_ci(zoo, Concept::Bottom(), concept_of("Cat")));
  EXPECT_TRUE(satisfies_ci(zoo, concept_of("(and Young Cat)"), concept_of("Cute")));
  EXPECT_FALSE(satisfies_ci(zoo, concept_of("Cat"), concept_of("Cute")));
}

TEST(Satisfaction, TBoxes) {
  auto zoo = testdata::zoo();
  EXPECT_TRUE(satisfies_tbox(zoo, TBox{}).model());
  TBox t = testdata::tbox("example1.tbox");
  EXPECT_TRUE(satisfies_tbox(zoo, t).model());
  t.add(Inclusion{concept_of("Wolf"), concept_of("Cute")});
  TBoxReport report = satisfies_tbox(zoo, t);
  EXPECT_FALSE(report.model());
  int failing = 0;
  for (const auto& item : report.items) {
    if (!item.holds) {
      ++failing;
      EXPECT_EQ(item.kind, "ci");
      EXPECT_EQ(item.text, "Wolf <= Cute");
    }
  }
  EXPECT_EQ(failing, 1);
}

TEST(Satisfaction, SpecWitness) {
  EXPECT_TRUE(satisfies_tbox(testdata::spec(), testdata::tbox("example2.tbox")).model());
}

// Properties over generated structures.

class GeneratedProperties : public ::testing::TestWithParam<Mode> {};

TEST_P(GeneratedProperties, NaturalConceptLaws) {
  const Mode mode = GetParam();
  for (uint64_t seed = 0; seed < 150; ++seed) {
    Interpretation interp = oracle::gen_interpretation(testdata::small_params(mode), seed);
    const auto& space = interp.space();
    const int n = space.feature_count();
    auto family = brute::consistent(n, forbidden_bits(space));

    for (uint64_t f : family) {
      for (uint64_t g = f;; g = (g - 1) & f) {
        EXPECT_TRUE(space.consistent(FeatureSet(g)));
        if (g == 0) break;
      }
    }

    std::vector<Concept> atoms;
    for (const auto& [name, f] : interp.natural_atoms()) {
      Concept a = Concept::Atom(name);
      atoms.push_back(a);
      EXPECT_EQ(extension(interp, a), up_set(interp, f));
      EXPECT_EQ(phi(interp, a), space.consistent(f) ? f : space.all()) << "seed " << seed;
    }

    for (const Concept& c : atoms) {
      for (const Concept& d : atoms) {
        FeatureSet pc = phi(interp, c), pd = phi(interp, d);
        FeatureSet both = phi(interp, Concept::And(c, d));
        EXPECT_TRUE((pc | pd).subset_of(both));
        if (space.consistent(pc | pd)) {
          EXPECT_EQ(both, pc | pd);
        }
        bool ci = satisfies_ci(interp, c, d);
        EXPECT_EQ(ci, pd.subset_of(pc) || is_empty(interp, c)) << "seed " << seed;
      }
      if (mode == Mode::kStrong) {
        DomainSet ds = delta(interp, c);
        bool split = false;
        for (int i : ds.elements()) {
          for (int j : ds.elements()) {
            if (i != j && interp.analogy().analogous(i, j)) split = true;
          }
        }
        if (split) {
          EXPECT_TRUE(is_empty(interp, c)) << "seed " << seed;
        }
      }
    }

    for (const auto& [role, kappa] : interp.kappas()) {
      EXPECT_EQ(kappa.apply(space, FeatureSet()), FeatureSet()) << role;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, GeneratedProperties,
                         ::testing::Values(Mode::kStrong, Mode::kWeak),
                         [](const auto& info) { return to_string(info.param); });

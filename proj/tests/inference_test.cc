#include <gtest/gtest.h>

#include <algorithm>

#include "data.h"
#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/inference/closure.h"
#include "elana/inference/rules.h"
#include "elana/oracle/propositions.h"
#include "elana/translations.h"
#include "elana/validation.h"

using namespace elana;
using namespace elana::inference;
using testdata::concept_of;

namespace {

Inclusion ci(const std::string& lhs, const std::string& rhs) {
  return Inclusion{concept_of(lhs), concept_of(rhs)};
}

AnalogyAssertion ana(const std::string& c1, const std::string& c2, const std::string& d1,
                     const std::string& d2, Strength s = Strength::kStandard) {
  return make_ana(concept_of(c1), concept_of(c2), concept_of(d1), concept_of(d2), s);
}

TBox tbox_of(const std::string& text) { return io::parse_tbox(text); }

bool has_rule(const ClosureResult& r, const std::string& rule) {
  for (int id : r.derived()) {
    if (r.facts.at(id).rule == rule) return true;
  }
  return false;
}

std::vector<std::string> conclusions(const ClosureResult& r) {
  std::vector<std::string> out;
  for (const auto& d : r.facts.all()) out.push_back(to_string(d.conclusion) + " " + d.rule);
  return out;
}

}  // namespace

TEST(Closure, EmptyTBox) {
  ClosureResult r = closure(TBox{});
  EXPECT_TRUE(r.facts.all().empty());
  EXPECT_FALSE(r.bound_reached);
}

TEST(Closure, CatsAndWolvesDerivesAdultWolves) {
  auto zoo = testdata::zoo();
  ClosureResult r = closure(testdata::tbox("example1.tbox"), &zoo);
  int id = r.find(ci("(and Adult Wolf)", "Dangerous"));
  ASSERT_GE(id, 0);
  auto rules = rules_used(r.facts, id);
  EXPECT_NE(std::find(rules.begin(), rules.end(), "lift_conjunction"), rules.end());
  EXPECT_NE(std::find(rules.begin(), rules.end(), "rule_extrapolation"), rules.end());
  EXPECT_EQ(r.facts.at(id).rule, "rule_extrapolation");
  EXPECT_TRUE(satisfies_ci(zoo, concept_of("(and Adult Wolf)"), concept_of("Dangerous")));
  for (int d : r.derived()) EXPECT_EQ(r.facts.at(d).holds_in_witness, true) << to_string(r.facts.at(d).conclusion);
}

TEST(Closure, PlansAndBuildingsDerivesPlanSpecifiesBuilding) {
  auto spec = testdata::spec();
  ClosureOptions options;
  options.max_depth = 2;
  ClosureResult r = closure(testdata::tbox("example2.tbox"), &spec, options);
  int id = r.find(ci("Plan", "(some specifies Building)"));
  ASSERT_GE(id, 0);
  auto rules = rules_used(r.facts, id);
  EXPECT_NE(std::find(rules.begin(), rules.end(), "lift_existential"), rules.end());
  EXPECT_EQ(r.facts.at(id).rule, "rule_translation");
  EXPECT_TRUE(satisfies_ci(spec, concept_of("Plan"), concept_of("(some specifies Building)")));
  EXPECT_GE(r.find(ana("Program", "Plan", "(some specifies Software)", "(some specifies Building)")), 0);
  for (int d : r.derived()) EXPECT_EQ(r.facts.at(d).holds_in_witness, true);
  EXPECT_NE(explain(r.facts, id).find("rule_translation"), std::string::npos);
}

TEST(Closure, CatsAndWolvesWithoutWitnessUsesAssumptions) {
  ClosureResult r = closure(testdata::tbox("example1.tbox"));
  int id = r.find(ci("(and Adult Wolf)", "Dangerous"));
  ASSERT_GE(id, 0);
  EXPECT_FALSE(r.facts.at(id).holds_in_witness.has_value());
}

TEST(Closure, WitnessMustBeAModel) {
  auto zoo = testdata::zoo();
  TBox t = testdata::tbox("example1.tbox");
  t.add(ci("Wolf", "Cute"));
  EXPECT_THROW(closure(t, &zoo), Error);
}

TEST(Closure, DepthBoundIsReported) {
  ClosureOptions options;
  options.max_depth = 1;
  ClosureResult r = closure(testdata::tbox("example2.tbox"), nullptr, options);
  EXPECT_TRUE(r.bound_reached);
  EXPECT_FALSE(r.bound_detail.empty());
  for (int id : r.derived()) EXPECT_LE(nesting_depth(r.facts.at(id).conclusion), 1);
}

TEST(Closure, Deterministic) {
  TBox t = testdata::tbox("example1.tbox");
  EXPECT_EQ(conclusions(closure(t)), conclusions(closure(t)));
}

TEST(Closure, MonotoneInTheTBox) {
  ClosureOptions options;
  options.max_depth = 2;
  TBox small = testdata::tbox("example1.tbox");
  TBox large = small;
  large.declare_natural("Pup");
  large.add(ci("Pup", "(and Young Dog)"));
  ClosureResult a = closure(small, nullptr, options);
  ClosureResult b = closure(large, nullptr, options);
  ASSERT_LT(b.facts.size(), options.max_facts);
  for (const auto& d : a.facts.all()) EXPECT_TRUE(b.facts.contains(d.conclusion));
}

TEST(Closure, WeakModeGating) {
  ClosureOptions options;
  options.mode = Mode::kWeak;
  ClosureResult r = closure(testdata::tbox("example1.tbox"), nullptr, options);
  EXPECT_EQ(r.mode, Mode::kWeak);
  EXPECT_FALSE(has_rule(r, "lift_conjunction"));
  EXPECT_FALSE(has_rule(r, "rule_extrapolation"));
  EXPECT_LT(r.find(ci("(and Adult Wolf)", "Dangerous")), 0);

  TBox c = tbox_of(
      "natural A, B, C, D, E, F\n"
      "ana A : B :: C : D\n"
      "ana A : E :: F : D\n");
  EXPECT_GE(closure(c).find(ana("B", "E", "F", "C")), 0);
  EXPECT_LT(closure(c, nullptr, options).find(ana("B", "E", "F", "C")), 0);

  TBox s = tbox_of(
      "natural A, B, C, D, E, F\n"
      "ana A : B :: C : D\n"
      "ana C : D :: E : F\n"
      "sana A : B :: C : D\n"
      "sana C : D :: E : F\n");
  ClosureResult weak = closure(s, nullptr, options);
  EXPECT_GE(weak.facts.find_analogy({concept_of("A"), concept_of("B"), concept_of("E"),
                                     concept_of("F")},
                                    Strength::kStrong),
            0);
}

TEST(Closure, WeakModeLiftsOnlyStandardStrength) {
  ClosureOptions options;
  options.mode = Mode::kWeak;
  options.max_depth = 1;
  TBox t = tbox_of("natural A, B, C, D\nintra r\nsana A : B :: C : D\n");
  ClosureResult r = closure(t, nullptr, options);
  std::array<Concept, 4> lifted = {concept_of("(some r A)"), concept_of("(some r B)"),
                                   concept_of("(some r C)"), concept_of("(some r D)")};
  EXPECT_GE(r.facts.find_analogy(lifted, Strength::kStandard), 0);
  EXPECT_LT(r.facts.find_analogy(lifted, Strength::kStrong), 0);
}

TEST(Closure, ExtrapolationNeedsTheTransposedAnalogy) {
  const std::string base =
      "natural A1, A2, A3, A4, B1, B2, B3, B4\n"
      "ana A1 : A2 :: A3 : A4\n"
      "ana B1 : B2 :: B3 : B4\n"
      "ci A1 <= B1\nci A2 <= B2\nci A3 <= B3\n"
      "nonempty A1\n";
  EXPECT_LT(closure(tbox_of(base)).find(ci("A4", "B4")), 0);
  EXPECT_GE(closure(tbox_of(base + "ana B1 : B3 :: B2 : B4\n")).find(ci("A4", "B4")), 0);
  // Without the nonemptiness side condition the rule stays silent.
  std::string no_side = base + "ana B1 : B3 :: B2 : B4\n";
  no_side.erase(no_side.find("nonempty A1\n"));
  EXPECT_LT(closure(tbox_of(no_side)).find(ci("A4", "B4")), 0);
}

TEST(Closure, InterpolationExample) {
  TBox t = tbox_of(
      "natural Cat, Wolf, Dog, X\n"
      "ci Cat <= X\nci Wolf <= X\nci Dog <= (btw Cat Wolf)\n");
  ClosureResult r = closure(t);
  int id = r.find(ci("Dog", "X"));
  ASSERT_GE(id, 0);
  EXPECT_EQ(r.facts.at(id).rule, "rule_interpolation");
}

TEST(Rules, SingleStepForms) {
  Signature sig;
  for (const char* a : {"A", "B", "C", "D", "X"}) sig.natural_atoms.insert(a);
  sig.intra_roles.insert("r");
  AnalogyAssertion a = ana("A", "B", "C", "D");
  EXPECT_EQ(lift_existential_all(a, "r", sig),
            ana("(some r A)", "(some r B)", "(some r C)", "(some r D)"));
  EXPECT_EQ(lift_existential_tail(a, "r", sig), ana("A", "B", "(some r C)", "(some r D)"));
  EXPECT_THROW(lift_existential_all(a, "s", sig), EvaluationError);

  EXPECT_EQ(interpolate(ci("A", "X"), ci("A", "X"), ci("D", "(btw A A)"), sig), ci("D", "X"));
  EXPECT_THROW(interpolate(ci("A", "Y"), ci("B", "Y"), ci("D", "(btw A B)"), sig), EvaluationError);
}

TEST(Rules, TrivialInstances) {
  TBox t = tbox_of(
      "natural C, D, E\n"
      "ana C : C :: D : D\nana D : D :: E : E\n"
      "ci C <= D\n");
  ClosureResult r = closure(t);
  EXPECT_GE(r.find(ana("C", "C", "E", "E")), 0);
  EXPECT_GE(r.find(ci("C", "D")), 0);
  EXPECT_EQ(r.facts.at(r.find(ci("C", "D"))).rule, "asserted");
}

TEST(Rules, ConjunctionLiftInZoo) {
  auto zoo = testdata::zoo();
  AnalogyAssertion lifted =
      ana("(and Young Cat)", "(and Adult WildCat)", "(and Young Dog)", "(and Adult Wolf)");
  EXPECT_TRUE(satisfies_ana(zoo, lifted));
  EXPECT_EQ(mu(zoo, concept_of("(and Young Cat)"), concept_of("(and Adult WildCat)")),
            std::vector<DomainTranslation>{DomainTranslation({{0, 1}, {2, 3}})});
  ClosureResult r = closure(testdata::tbox("example1.tbox"), &zoo);
  int id = r.find(lifted);
  ASSERT_GE(id, 0);
  EXPECT_EQ(r.facts.at(id).rule, "lift_conjunction");
  EXPECT_EQ(r.facts.at(id).side_conditions.size(), 4u);
}

TEST(Rules, SymmetryInZoo) {
  auto zoo = testdata::zoo();
  ClosureResult r = closure(testdata::tbox("example1.tbox"), &zoo);
  EXPECT_GE(r.find(ana("WildCat", "Cat", "Wolf", "Dog")), 0);
  EXPECT_TRUE(satisfies_ana(zoo, ana("WildCat", "Cat", "Wolf", "Dog")));
}

// Strong mode, but a forbidden set spans two non-analogous domains: the
// image of A under κ is inconsistent while that of B is not, so lifting
// over ∃r breaks.
TEST(Regression, ExistentialLiftingNeedsConsistentImages) {
  io::Json doc = io::Json::parse(R"({
    "features": ["a1", "k1", "a2", "k2", "z", "z'"],
    "domains": [["a1", "k1"], ["a2", "k2"], ["z", "z'"]],
    "forbidden": [["a1", "a2"], ["a1", "k2"], ["k1", "a2"], ["k1", "k2"], ["k1", "z'"], "ALL"],
    "analogous": [[1, 2]],
    "bijections": {"1->2": {"a1": "a2", "k1": "k2"}},
    "mode": "strong",
    "natural_atoms": {"A": ["a1", "z"], "B": ["a2", "z"]},
    "kappa": {"r": {"mode": "additive",
                    "tables": {"a1": ["k1"], "k1": ["k1"], "z": ["z'"], "z'": ["z'"]}}}
  })");
  Interpretation interp = io::interpretation_from_json(doc);
  ASSERT_TRUE(validate_interpretation(interp).valid());
  oracle::Instantiation inst{{concept_of("A"), concept_of("B"), concept_of("A"), concept_of("B")},
                             "r", Strength::kStandard};
  oracle::Verdict v = oracle::check_proposition("lift-existential-a", interp, inst);
  EXPECT_TRUE(v.premises_hold);
  EXPECT_FALSE(v.conclusion_holds);
  EXPECT_TRUE(is_empty(interp, concept_of("(some r A)")));
  EXPECT_FALSE(is_empty(interp, concept_of("(some r B)")));
}

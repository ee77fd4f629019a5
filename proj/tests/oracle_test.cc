#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "data.h"
#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/oracle/countermodel.h"
#include "elana/oracle/fixtures.h"
#include "elana/oracle/generator.h"
#include "elana/oracle/naive.h"
#include "elana/oracle/propositions.h"
#include "elana/oracle/sweep.h"
#include "elana/translations.h"
#include "elana/validation.h"

using namespace elana;
using namespace elana::oracle;
using testdata::concept_of;

namespace {

const std::vector<Fixture>& corpus() {
  static const std::vector<Fixture> fixtures = load_fixtures(testdata::path("fixtures"));
  return fixtures;
}

Instantiation inst(std::initializer_list<const char*> names, Strength s = Strength::kStandard,
                   std::string role = "") {
  Instantiation out;
  for (const char* n : names) out.concepts.push_back(concept_of(n));
  out.strength = s;
  out.role = std::move(role);
  return out;
}

SearchBounds bounds(int features, int atoms) {
  SearchBounds b;
  b.max_features = features;
  b.max_atoms = atoms;
  return b;
}

}  // namespace

TEST(Generator, DeterministicPerSeed) {
  GeneratorParams p;
  for (uint64_t seed : {0u, 1u, 99u}) {
    EXPECT_EQ(io::print_interpretation(gen_interpretation(p, seed)),
              io::print_interpretation(gen_interpretation(p, seed)));
  }
  EXPECT_NE(io::print_interpretation(gen_interpretation(p, 1)),
            io::print_interpretation(gen_interpretation(p, 2)));
}

TEST(Generator, StrongStructuresAreValid) {
  GeneratorParams p;
  int with_analogy = 0, with_kappa = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    Interpretation interp = gen_interpretation(p, seed);
    ASSERT_TRUE(validate_interpretation(interp).valid()) << "seed " << seed;
    ASSERT_LE(interp.space().feature_count(), p.max_features);
    ASSERT_LE(interp.space().domain_count(), p.max_domains);
    with_analogy += !interp.analogy().generators().empty();
    with_kappa += !interp.kappas().empty();
  }
  EXPECT_GT(with_analogy, 500);
  EXPECT_EQ(with_kappa, 1000);
}

TEST(Generator, WeakStructuresCanBreakMutualExclusion) {
  GeneratorParams p;
  p.mode = Mode::kWeak;
  p.exclusion_pairs = false;
  int violating = 0;
  for (uint64_t seed = 0; seed < 1000; ++seed) {
    Interpretation interp = gen_interpretation(p, seed);
    ASSERT_TRUE(validate_interpretation(interp).valid()) << "seed " << seed;
    violating += validate_interpretation(interp.with_mode(Mode::kStrong)).has("analogous-exclusion");
  }
  EXPECT_GT(violating, 0);
}

TEST(Generator, Caps) {
  GeneratorParams p;
  p.max_features = kGeneratorFeatureCap + 1;
  EXPECT_THROW(gen_interpretation(p, 0), Error);
  p.max_features = 0;
  EXPECT_THROW(gen_interpretation(p, 0), Error);
}

TEST(Propositions, Registry) {
  EXPECT_EQ(propositions().size(), 14u);
  EXPECT_THROW(proposition("exchange-of-means"), Error);
  auto zoo = testdata::zoo();
  EXPECT_THROW(check_proposition("nope", zoo, inst({"Cat"})), Error);
  EXPECT_THROW(check_proposition("symmetry", zoo, inst({"Cat", "Cat"})), Error);
  EXPECT_THROW(check_proposition("lift-existential-a", zoo, inst({"Cat", "Cat", "Dog", "Dog"})),
               Error);
}

TEST(Propositions, Examples) {
  auto zoo = testdata::zoo();
  Verdict sym = check_proposition("symmetry", zoo, inst({"Cat", "Cat", "Dog", "Dog"}));
  EXPECT_TRUE(sym.premises_hold);
  EXPECT_TRUE(sym.conclusion_holds);

  Verdict uniq = check_proposition("uniqueness", zoo, inst({"Cat", "WildCat"}));
  EXPECT_TRUE(uniq.premises_hold);
  EXPECT_TRUE(uniq.conclusion_holds);

  Verdict inv = check_proposition("inversion", zoo, inst({"Cat", "WildCat"}));
  EXPECT_TRUE(inv.premises_hold && inv.conclusion_holds);


  Verdict vacuous = check_proposition("rule-translation", zoo, inst({"Cat", "Cute", "Dog", "Cute"}));
  EXPECT_FALSE(vacuous.premises_hold);
  EXPECT_FALSE(vacuous.fails());

  auto spec = testdata::spec();
  Verdict lift = check_proposition("lift-existential-b", spec,
                                   inst({"Program", "Plan", "Software", "Building"},
                                        Strength::kStandard, "specifies"));
  EXPECT_TRUE(lift.premises_hold);
  EXPECT_TRUE(lift.conclusion_holds);

  Verdict transl = check_proposition(
      "rule-translation", spec,
      inst({"Program", "Plan", "(some specifies Software)", "(some specifies Building)"}));
  EXPECT_TRUE(transl.premises_hold);
  EXPECT_TRUE(transl.conclusion_holds);
}

TEST(Propositions, CTransitivityFailsOnWeakFixture) {
  auto fixture = find_fixture(corpus(), "CE-CTRANS-WEAK-1");
  ASSERT_TRUE(fixture);
  EXPECT_EQ(fixture->mode, Mode::kWeak);
  Verdict v = check_proposition("c-transitivity", fixture->interp,
                                inst({"A2", "A3", "A4", "A5", "A1", "A6"}));
  EXPECT_TRUE(v.premises_hold);
  EXPECT_FALSE(v.conclusion_holds);
}

TEST(Fixtures, CorpusReproduces) {
  const std::set<std::string> expected = {
      "CE-CTRANS-WEAK-1", "CE-CTRANS-WEAK-2", "CE-DESID-1",          "CE-DESID-2",
      "CE-EXTRAP-SIDE",   "CE-EXTRAP-WEAK",   "CE-LIFTCONJ-WEAK",   "CE-LIFTEXISTS-STRONG",
      "CE-STRANS-WEAK"};
  std::set<std::string> ids;
  for (const Fixture& f : corpus()) {
    ids.insert(f.id);
    FixtureReport report = run_fixture(f);
    EXPECT_TRUE(report.validity_violations.empty()) << f.id;
    for (const auto& c : report.checks) {
      EXPECT_TRUE(c.ok) << f.id << " " << c.kind << " " << c.text << " expected " << c.expected
                        << " observed " << c.observed;
    }
    for (const auto& p : report.propositions) EXPECT_TRUE(p.ok) << f.id << " " << p.prop.id;
    if (f.forbidden_derivation) {
      EXPECT_TRUE(report.closure_checked) << f.id;
      EXPECT_FALSE(report.forbidden_derived) << f.id;
    }
    EXPECT_TRUE(report.ok()) << f.id;
  }
  EXPECT_EQ(ids, expected);
}

TEST(Fixtures, DivergenceEvidence) {
  auto report = [](const char* id) { return run_fixture(*find_fixture(corpus(), id)); };
  EXPECT_TRUE(reproduces(report("CE-CTRANS-WEAK-1"), "c-transitivity", Strength::kStandard));
  EXPECT_TRUE(reproduces(report("CE-CTRANS-WEAK-2"), "c-transitivity", Strength::kStrong));
  EXPECT_TRUE(reproduces(report("CE-STRANS-WEAK"), "s-transitivity-a", Strength::kStandard));
  EXPECT_FALSE(reproduces(report("CE-STRANS-WEAK"), "s-transitivity-a", Strength::kStrong));
  EXPECT_TRUE(reproduces(report("CE-LIFTEXISTS-STRONG"), "lift-existential-a", Strength::kStrong));
  EXPECT_TRUE(reproduces(report("CE-LIFTCONJ-WEAK"), "lift-conjunction", Strength::kStandard));
  EXPECT_TRUE(reproduces(report("CE-LIFTCONJ-WEAK"), "lift-conjunction", Strength::kStrong));
  EXPECT_TRUE(reproduces(report("CE-EXTRAP-WEAK"), "rule-extrapolation", Strength::kStandard));
  EXPECT_TRUE(reproduces(report("CE-EXTRAP-WEAK"), "rule-extrapolation", Strength::kStrong));
}

TEST(Fixtures, WeakMuWithTwoElements) {
  const Fixture& f = *find_fixture(corpus(), "CE-CTRANS-WEAK-2");
  auto m = mu(f.interp, concept_of("A1"), concept_of("A3"));
  ASSERT_EQ(m.size(), 2u);
  EXPECT_EQ(to_string(m[0]), "{}");
  EXPECT_EQ(to_string(m[1]), "{(1,3),(3,1)}");
  EXPECT_FALSE(is_empty(f.interp, concept_of("A1")));
  EXPECT_FALSE(is_empty(f.interp, concept_of("A3")));
}

TEST(NaiveMu, MatchesOnFixtures) {
  for (const Fixture& f : corpus()) {
    if (f.interp.space().domain_count() > 4) continue;
    for (const auto& [a, fa] : f.interp.natural_atoms()) {
      for (const auto& [b, fb] : f.interp.natural_atoms()) {
        Concept ca = Concept::Atom(a), cb = Concept::Atom(b);
        EXPECT_EQ(mu(f.interp, ca, cb), naive_mu(f.interp.space(), f.interp.analogy(),
                                                 phi(f.interp, ca), phi(f.interp, cb)))
            << f.id << " " << a << " " << b;
      }
    }
  }
}

TEST(Sweep, IndependentOfThreadCount) {
  SweepOptions o;
  o.proposition = "uniqueness";
  o.params.mode = Mode::kWeak;
  o.seeds = 300;
  o.threads = 1;
  SweepResult one = run_sweep(o);
  o.threads = 3;
  SweepResult three = run_sweep(o);
  EXPECT_EQ(io::Json(to_json(one)).dump(), io::Json(to_json(three)).dump());
  ASSERT_GT(one.failures, 0);
  ASSERT_TRUE(one.first_failing_seed);
  Sample s = replay_seed(o, *one.first_failing_seed);
  EXPECT_TRUE(check_proposition(o.proposition, s.interp, s.inst).fails());
}

TEST(Sweep, StrongModeSmokeRun) {
  for (const auto& info : propositions()) {
    SweepOptions o;
    o.proposition = info.id;
    o.seeds = 150;
    SweepResult r = run_sweep(o);
    EXPECT_TRUE(r.holds()) << info.id << ": " << r.first_failure;
    EXPECT_GT(r.non_vacuous, 30) << info.id;
  }
}

TEST(Matrix, WeakCellsMatch) {
  MatrixReport report = run_divergence_matrix(Mode::kWeak, testdata::path("fixtures"), 200);
  EXPECT_EQ(report.cells.size(), 10u);
  for (const auto& cell : report.cells) {
    EXPECT_TRUE(cell.matches()) << cell.rule << " " << cell.evidence;
    if (!cell.expect_holds) {
      EXPECT_EQ(cell.evidence.rfind("CE-", 0), 0u) << cell.rule;
    }
  }
  EXPECT_TRUE(report.all_match());
}

TEST(Countermodel, TrivialQueries) {
  TBox empty;
  empty.declare_natural("C");
  Query q = Inclusion{concept_of("C"), concept_of("C")};
  for (int n = 1; n <= 4; ++n) {
    SearchResult r = countermodel_search(empty, q, bounds(n, 4));
    EXPECT_FALSE(r.countermodel);
    EXPECT_NE(r.caveat().find("does not prove entailment"), std::string::npos);
  }
}

TEST(Countermodel, ExchangeOfMeans) {
  TBox t = io::parse_tbox("natural A, B, C, D\nana A : B :: C : D\n");
  auto start = std::chrono::steady_clock::now();
  SearchResult found = countermodel_search(
      t, make_ana(concept_of("A"), concept_of("C"), concept_of("B"), concept_of("D")),
      bounds(4, 4));
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(60));
  ASSERT_TRUE(found.countermodel);
  EXPECT_EQ(found.verdict(), "countermodel");
  const Interpretation& m = *found.countermodel;
  EXPECT_TRUE(validate_interpretation(m).valid());
  EXPECT_TRUE(satisfies_tbox(m, t).model());
  EXPECT_FALSE(satisfies_ana(m, make_ana(concept_of("A"), concept_of("C"), concept_of("B"),
                                         concept_of("D"))));

  SearchResult none = countermodel_search(t, t.analogies()[0], bounds(4, 4));
  EXPECT_FALSE(none.countermodel);
  EXPECT_EQ(none.verdict(), "none within bounds");
}

TEST(Countermodel, ExampleOneWithinBounds) {
  Query q = Inclusion{concept_of("(and Adult Wolf)"), concept_of("Dangerous")};
  TBox t = testdata::tbox("example1.tbox");
  EXPECT_FALSE(countermodel_search(t, q, bounds(4, 8)).countermodel);

  // Dropping the cat/dog analogy leaves the query unsupported.
  TBox weaker;
  for (const auto& a : t.signature().natural_atoms) weaker.declare_natural(a);
  for (const auto& ci : t.inclusions()) weaker.add(ci);
  for (const auto& a : t.analogies()) {
    if (a.terms[0] != concept_of("Cat")) weaker.add(a);
  }
  for (const auto& c : t.nonempty()) weaker.add_nonempty(c);
  SearchResult r = countermodel_search(weaker, q, bounds(4, 8));
  ASSERT_TRUE(r.countermodel);
  EXPECT_TRUE(satisfies_tbox(*r.countermodel, weaker).model());
  EXPECT_FALSE(satisfies_ci(*r.countermodel, concept_of("(and Adult Wolf)"), concept_of("Dangerous")));
}

TEST(Countermodel, IntraRoles) {
  TBox t = io::parse_tbox("natural A, B\nintra r\nana A : B :: A : B\n");
  Query q = make_ana(concept_of("A"), concept_of("B"), concept_of("(some r A)"),
                     concept_of("(some r B)"));
  SearchResult r = countermodel_search(t, q, bounds(3, 4));
  EXPECT_FALSE(r.countermodel);
}

TEST(Countermodel, Errors) {
  TBox t = io::parse_tbox("natural A\n");
  Query q = Inclusion{concept_of("A"), concept_of("A")};
  EXPECT_THROW(countermodel_search(t, q, bounds(kSearchFeatureCap + 1, 4)), Error);
  EXPECT_THROW(countermodel_search(t, q, bounds(4, kSearchAtomCap + 1)), Error);
  EXPECT_THROW(countermodel_search(t, Inclusion{concept_of("A"), concept_of("B")}, bounds(3, 4)),
               Error);
  TBox five = io::parse_tbox("natural A, B, C, D, E\nci A <= B\nci C <= D\nci D <= E\n");
  EXPECT_THROW(countermodel_search(five, q, bounds(3, 4)), Error);
  TBox ordinary = io::parse_tbox("natural A\nci A <= (some likes A)\n");
  EXPECT_THROW(countermodel_search(ordinary, q, bounds(3, 4)), Error);
}

#include <gtest/gtest.h>

#include "data.h"
#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/io/document.h"
#include "elana/io/syntax.h"
#include "elana/oracle/generator.h"
#include "elana/validation.h"

using namespace elana;
using namespace elana::io;

namespace {

void expect_parse_error(const std::string& text, int line, int column, const std::string& fragment) {
  try {
    parse_tbox(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

}  // namespace

TEST(ConceptSyntax, Basics) {
  EXPECT_EQ(parse_concept("top"), Concept::Top());
  EXPECT_EQ(parse_concept("bot"), Concept::Bottom());
  EXPECT_EQ(parse_concept("(and Young Cat)"),
            Concept::And(Concept::Atom("Young"), Concept::Atom("Cat")));
  EXPECT_EQ(parse_concept("(some r (btw A B))"),
            Concept::Exists("r", Concept::Between(Concept::Atom("A"), Concept::Atom("B"))));
  EXPECT_EQ(parse_concept("(and A B C)"),
            Concept::And(Concept::Atom("A"), Concept::And(Concept::Atom("B"), Concept::Atom("C"))));
}

TEST(ConceptSyntax, Errors) {
  Signature sig;
  sig.natural_atoms = {"Cat"};
  try {
    parse_concept("(btw Cat NonNaturalX)", &sig);
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("NonNaturalX"), std::string::npos);
  }
  EXPECT_NO_THROW(parse_concept("(btw Cat NonNaturalX)"));
  EXPECT_THROW(parse_concept("(and A)"), ParseError);
  EXPECT_THROW(parse_concept("(or A B)"), ParseError);
  EXPECT_THROW(parse_concept("(some and A)"), ParseError);
  try {
    parse_concept("(and A\n  (some r B)");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(ConceptSyntax, RoundTrip) {
  for (const char* text : {"top", "bot", "A", "(and A B)", "(some r (and A (btw B C)))",
                           "(btw (and A B) (some r C))"}) {
    Concept c = parse_concept(text);
    EXPECT_EQ(to_sexpr(c), text);
    EXPECT_EQ(parse_concept(to_sexpr(c)), c);
  }
  EXPECT_EQ(to_dl(parse_concept("(and A (some r (btw B C)))")), "A ⊓ ∃r.(B ⋈ C)");
}

TEST(TBoxSyntax, SingleInclusion) {
  TBox t = parse_tbox("ci bot <= top\n");
  ASSERT_EQ(t.inclusions().size(), 1u);
  EXPECT_EQ(t.inclusions()[0], (Inclusion{Concept::Bottom(), Concept::Top()}));
  EXPECT_TRUE(t.analogies().empty());
}

TEST(TBoxSyntax, CatsAndWolvesCounts) {
  TBox t = testdata::tbox("example1.tbox");
  EXPECT_EQ(t.inclusions().size(), 3u);
  EXPECT_EQ(t.analogies().size(), 4u);
  EXPECT_EQ(t.nonempty().size(), 4u);
  EXPECT_EQ(t.signature().natural_atoms.size(), 8u);
  EXPECT_EQ(to_string(t.analogies()[1]), "ana Cat : WildCat :: Dog : Wolf");
}

TEST(TBoxSyntax, Errors) {
  expect_parse_error("natural Cat, WildCat, Dog\nana Cat : WildCat :: Dog : Wolf\n", 2, 28,
                     "Wolf");
  expect_parse_error("natural A\nintra A\n", 2, 7, "conflicting");
  expect_parse_error("ci A <= B\nnatural A\n", 2, 9, "after use");
  expect_parse_error("natural A\n  frob A\n", 2, 3, "unknown directive");
  expect_parse_error("ci A <= (and B\n", 1, 15, "expected");
  expect_parse_error("natural A, B\nana A : B : A : B\n", 2, 11, "'::'");
}

TEST(TBoxSyntax, RoundTrip) {
  for (const char* name : {"example1.tbox", "example2.tbox"}) {
    TBox t = testdata::tbox(name);
    EXPECT_EQ(parse_tbox(print_tbox(t)), t) << name;
  }
  TBox s = parse_tbox("natural A, B\nsana A : B :: A : B\nnonempty (and A B)\n");
  EXPECT_EQ(s.analogies()[0].strength, Strength::kStrong);
  EXPECT_EQ(parse_tbox(print_tbox(s)), s);
}

TEST(Axioms, Parse) {
  Signature sig;
  sig.natural_atoms = {"A", "B"};
  EXPECT_TRUE(std::holds_alternative<Inclusion>(parse_axiom("A <= B", sig)));
  EXPECT_TRUE(std::holds_alternative<Inclusion>(parse_axiom("ci A <= B", sig)));
  auto a = std::get<AnalogyAssertion>(parse_axiom("sana A : B :: B : A", sig));
  EXPECT_EQ(a.strength, Strength::kStrong);
  EXPECT_EQ(parse_assertion("A : A :: B : B", sig, Strength::kStandard),
            make_ana(Concept::Atom("A"), Concept::Atom("A"), Concept::Atom("B"), Concept::Atom("B")));
  EXPECT_THROW(parse_axiom("", sig), ParseError);
}

TEST(Documents, FixturesRoundTrip) {
  for (const char* name : {"fx-zoo.json", "fx-spec.json"}) {
    Interpretation interp = load_interpretation(testdata::path(name));
    std::string printed = print_interpretation(interp);
    EXPECT_EQ(print_interpretation(parse_interpretation(printed)), printed) << name;
  }
}

TEST(Documents, GeneratedRoundTrip) {
  for (Mode mode : {Mode::kStrong, Mode::kWeak}) {
    for (uint64_t seed = 0; seed < 100; ++seed) {
      Interpretation interp = oracle::gen_interpretation(testdata::small_params(mode), seed);
      Json doc = interpretation_to_json(interp);
      Interpretation back = interpretation_from_json(doc);
      ASSERT_EQ(interpretation_to_json(back), doc) << "seed " << seed;
      EXPECT_TRUE(validate_interpretation(back).valid());
      for (const auto& [name, f] : interp.natural_atoms()) {
        EXPECT_EQ(phi(back, Concept::Atom(name)), phi(interp, Concept::Atom(name)));
      }
    }
  }
}

TEST(Documents, PlainAtomsAndRoles) {
  Interpretation interp = parse_interpretation(R"({
    "features": ["f", "g"],
    "domains": [["f"], ["g"]],
    "forbidden": ["ALL"],
    "mode": "weak",
    "plain_atoms": {"P": ["{f}", "{}"]},
    "roles": {"likes": [["{}", "{f}"]]}
  })");
  EXPECT_EQ(interp.mode(), Mode::kWeak);
  IndividualSet p = extension(interp, Concept::Atom("P"));
  EXPECT_EQ(p.count(), 2u);
  IndividualSet likes = extension(interp, parse_concept("(some likes P)"));
  EXPECT_EQ(likes.count(), 1u);
  EXPECT_TRUE(likes.test(interp.find_individual("{}")));
  std::string printed = print_interpretation(interp);
  EXPECT_EQ(print_interpretation(parse_interpretation(printed)), printed);
}

TEST(Documents, Errors) {
  EXPECT_THROW(parse_interpretation("{"), Error);
  EXPECT_THROW(parse_interpretation(R"({"features": ["f"]})"), Error);
  EXPECT_THROW(parse_interpretation(R"({"features": ["f"], "domains": [["g"]]})"), Error);
  EXPECT_THROW(parse_interpretation(
                   R"({"features": ["f"], "domains": [["f"]], "natural_atoms": {"A": ["x"]}})"),
               Error);
  EXPECT_THROW(parse_interpretation(R"({"features": ["f"], "domains": [["f"]], "mode": "odd"})"),
               Error);
}

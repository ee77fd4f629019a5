#include "elana/oracle/fixtures.h"

#include <algorithm>

#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/inference/closure.h"
#include "elana/io/syntax.h"
#include "elana/proportions.h"
#include "elana/translations.h"
#include "elana/validation.h"

namespace elana::oracle {
namespace {

Strength parse_strength(const std::string& s) {
  if (s == "standard") return Strength::kStandard;
  if (s == "strong") return Strength::kStrong;
  throw StructureError("unknown strength '" + s + "'");
}

std::string strength_name(Strength s) { return s == Strength::kStrong ? "strong" : "standard"; }

std::string join(std::vector<std::string> items) {
  std::sort(items.begin(), items.end());
  std::string out = "[";
  for (size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

CheckOutcome run_check(const Interpretation& I, const io::Json& c) {
  CheckOutcome out;
  out.kind = c.at("kind").get<std::string>();
  out.role = c.value("role", "info");
  const Signature& sig = I.signature();
  try {
    if (out.kind == "mu") {
      std::string lhs = c.at("lhs").get<std::string>(), rhs = c.at("rhs").get<std::string>();
      out.text = "mu(" + lhs + ", " + rhs + ")";
      std::vector<std::string> expected = c.at("expect").get<std::vector<std::string>>();
      std::vector<std::string> observed;
      for (const auto& u : mu(I, io::parse_concept(lhs, &sig), io::parse_concept(rhs, &sig))) {
        observed.push_back(to_string(u));
      }
      out.expected = join(expected);
      out.observed = join(observed);
      out.ok = out.expected == out.observed;
      return out;
    }
    out.text = c.at("text").get<std::string>();
    bool expect = c.at("expect").get<bool>();
    bool value;
    if (out.kind == "ana" || out.kind == "sana") {
      auto a = io::parse_assertion(out.text, sig,
                                   out.kind == "sana" ? Strength::kStrong : Strength::kStandard);
      value = satisfies_ana(I, a);
    } else if (out.kind == "ap") {
      auto a = io::parse_assertion(out.text, sig, Strength::kStandard);
      value = ap_concepts(I, a.terms[0], a.terms[1], a.terms[2], a.terms[3], ApLevel::kFeatures);
    } else if (out.kind == "ci") {
      auto ci = std::get<Inclusion>(io::parse_axiom(out.text, sig));
      value = satisfies_ci(I, ci.lhs, ci.rhs);
    } else if (out.kind == "nonempty") {
      value = !is_empty(I, io::parse_concept(out.text, &sig));
    } else {
      throw StructureError("unknown check kind '" + out.kind + "'");
    }
    out.expected = expect ? "true" : "false";
    out.observed = value ? "true" : "false";
    out.ok = value == expect;
  } catch (const Error& e) {
    out.observed = std::string("error: ") + e.what();
    out.ok = false;
  }
  return out;
}

}  // namespace

bool FixtureReport::ok() const {
  if (!validity_violations.empty() || !closure_error.empty() || forbidden_derived) return false;
  for (const auto& c : checks) {
    if (!c.ok) return false;
  }
  for (const auto& p : propositions) {
    if (!p.ok) return false;
  }
  return true;
}

Fixture fixture_from_json(const io::Json& doc) {
  Fixture f;
  try {
    f.id = doc.at("id").get<std::string>();
    f.description = doc.value("description", "");
    f.mode = parse_mode(doc.at("mode").get<std::string>());
    f.interp = io::interpretation_from_json(doc.at("interpretation"));
    f.checks = doc.value("checks", io::Json::array());
    f.premises = doc.value("premises", std::vector<std::string>{});
    if (doc.contains("forbidden_derivation")) {
      f.forbidden_derivation = doc.at("forbidden_derivation").get<std::string>();
    }
    for (const auto& p : doc.value("propositions", io::Json::array())) {
      FixtureProposition fp;
      fp.id = p.at("id").get<std::string>();
      fp.strength = parse_strength(p.value("strength", "standard"));
      fp.concepts = p.at("concepts").get<std::vector<std::string>>();
      fp.role = p.value("role", "");
      std::string expect = p.value("expect", "fails");
      if (expect != "fails" && expect != "holds") {
        throw StructureError("proposition expectation must be 'fails' or 'holds'");
      }
      fp.expect_fail = expect == "fails";
      f.propositions.push_back(std::move(fp));
    }
  } catch (const io::Json::exception& e) {
    throw StructureError(std::string("fixture: ") + e.what());
  }
  if (f.interp.mode() != f.mode) throw StructureError("fixture " + f.id + ": mode mismatch");
  return f;
}

Fixture load_fixture(const std::filesystem::path& path) {
  io::Json doc;
  try {
    doc = io::Json::parse(io::read_file(path));
  } catch (const io::Json::parse_error& e) {
    throw StructureError(path.string() + ": " + e.what());
  }
  return fixture_from_json(doc);
}

std::vector<Fixture> load_fixtures(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("no fixture directory " + dir.string());
  std::vector<Fixture> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") out.push_back(load_fixture(entry.path()));
  }
  std::sort(out.begin(), out.end(),
            [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
  return out;
}

std::optional<Fixture> find_fixture(const std::vector<Fixture>& fixtures, const std::string& id) {
  for (const auto& f : fixtures) {
    if (f.id == id) return f;
  }
  return std::nullopt;
}

FixtureReport run_fixture(const Fixture& fixture) {
  FixtureReport report;
  report.id = fixture.id;
  const Interpretation& I = fixture.interp;
  for (const auto& v : validate_interpretation(I).violations) {
    report.validity_violations.push_back(v.condition + ": " + v.message);
  }
  for (const auto& c : fixture.checks) report.checks.push_back(run_check(I, c));

  for (const auto& p : fixture.propositions) {
    PropositionOutcome out{p, {}, false};
    try {
      Instantiation inst;
      inst.strength = p.strength;
      inst.role = p.role;
      for (const auto& text : p.concepts) {
        inst.concepts.push_back(io::parse_concept(text, &I.signature()));
      }
      out.verdict = check_proposition(p.id, I, inst);
      out.ok = out.verdict.fails() == p.expect_fail;
    } catch (const Error&) {
      out.ok = false;
    }
    report.propositions.push_back(std::move(out));
  }

  if (fixture.forbidden_derivation && !fixture.premises.empty()) {
    try {
      std::string text;
      for (const auto& line : fixture.premises) text += line + "\n";
      TBox tbox = io::parse_tbox(text);
      inference::ClosureOptions options;
      options.mode = fixture.mode;
      auto result = inference::closure(tbox, nullptr, options);
      auto fact = inference::normalize(io::parse_axiom(*fixture.forbidden_derivation,
                                                       tbox.signature()));
      if (const auto* a = std::get_if<AnalogyAssertion>(&fact)) {
        report.forbidden_derived = result.facts.find_analogy(a->terms, a->strength) >= 0;
      } else {
        report.forbidden_derived = result.facts.contains(fact);
      }
      report.closure_checked = true;
    } catch (const Error& e) {
      report.closure_error = e.what();
    }
  }
  return report;
}

io::Json to_json(const FixtureReport& report) {
  io::Json j;
  j["id"] = report.id;
  j["ok"] = report.ok();
  j["validity_violations"] = report.validity_violations;
  auto checks = io::Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"kind", c.kind}, {"text", c.text}, {"role", c.role},
                      {"expected", c.expected}, {"observed", c.observed}, {"ok", c.ok}});
  }
  j["checks"] = checks;
  auto props = io::Json::array();
  for (const auto& p : report.propositions) {
    props.push_back({{"id", p.prop.id},
                     {"strength", strength_name(p.prop.strength)},
                     {"expect", p.prop.expect_fail ? "fails" : "holds"},
                     {"premises_hold", p.verdict.premises_hold},
                     {"conclusion_holds", p.verdict.conclusion_holds},
                     {"ok", p.ok}});
  }
  j["propositions"] = props;
  j["closure_checked"] = report.closure_checked;
  j["forbidden_derived"] = report.forbidden_derived;
  if (!report.closure_error.empty()) j["closure_error"] = report.closure_error;
  return j;
}

bool reproduces(const FixtureReport& report, const std::string& proposition, Strength strength) {
  if (!report.ok()) return false;
  for (const auto& p : report.propositions) {
    if (p.prop.id == proposition && p.prop.strength == strength && p.prop.expect_fail &&
        p.verdict.fails()) {
      return true;
    }
  }
  return false;
}

}  // namespace elana::oracle

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "elana/interpretation.h"
#include "elana/io/document.h"
#include "elana/oracle/propositions.h"
#include "elana/tbox.h"

namespace elana::oracle {

struct FixtureProposition {
  std::string id;
  Strength strength = Strength::kStandard;
  std::vector<std::string> concepts;
  std::string role;
  bool expect_fail = true;  // "fails" (default) or "holds"
};

// A counterexample document: an interpretation, the facts it should make
// true or false, and the derivation a sound engine must not produce.
struct Fixture {
  std::string id;
  std::string description;
  Mode mode = Mode::kStrong;
  Interpretation interp;
  io::Json checks;
  std::vector<std::string> premises;
  std::optional<std::string> forbidden_derivation;
  std::vector<FixtureProposition> propositions;
};

struct CheckOutcome {
  std::string kind;
  std::string text;
  std::string role;
  std::string expected;
  std::string observed;
  bool ok = false;
};

struct PropositionOutcome {
  FixtureProposition prop;
  Verdict verdict;
  bool ok = false;
};

struct FixtureReport {
  std::string id;
  std::vector<std::string> validity_violations;
  std::vector<CheckOutcome> checks;
  std::vector<PropositionOutcome> propositions;
  bool closure_checked = false;
  bool forbidden_derived = false;
  std::string closure_error;
  bool ok() const;
};

Fixture fixture_from_json(const io::Json& doc);
Fixture load_fixture(const std::filesystem::path& path);
// Every *.json file in `dir`, sorted by id.
std::vector<Fixture> load_fixtures(const std::filesystem::path& dir);
std::optional<Fixture> find_fixture(const std::vector<Fixture>& fixtures, const std::string& id);

FixtureReport run_fixture(const Fixture& fixture);
io::Json to_json(const FixtureReport& report);

// Whether the fixture exhibits `proposition` failing at `strength`.
bool reproduces(const FixtureReport& report, const std::string& proposition, Strength strength);

}  // namespace elana::oracle

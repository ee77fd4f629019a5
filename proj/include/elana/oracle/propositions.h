#pragma once

#include <string>
#include <vector>

#include "elana/concept.h"
#include "elana/interpretation.h"
#include "elana/oracle/generator.h"
#include "elana/tbox.h"

namespace elana::oracle {

// Concepts (and role) a proposition quantifies over, in the order used by
// its statement. Assertion premises and conclusions share `strength`.
struct Instantiation {
  std::vector<Concept> concepts;
  std::string role;
  Strength strength = Strength::kStandard;
};

struct Verdict {
  bool premises_hold = false;
  bool conclusion_holds = false;
  bool fails() const { return premises_hold && !conclusion_holds; }
};

struct PropositionInfo {
  std::string id;
  int arity;
  bool needs_role;
  bool uses_strength;
  std::string statement;
};

const std::vector<PropositionInfo>& propositions();
const PropositionInfo& proposition(const std::string& id);  // throws Error

// Throws Error on an unknown id or a wrong number of concepts.
Verdict check_proposition(const std::string& id, const Interpretation& interp,
                          const Instantiation& inst);

struct Sample {
  Interpretation interp;
  Instantiation inst;
};

// Draws an instantiation, mostly built so that the premises hold: fresh
// natural atoms ("_s0", ...) are added with features related through
// random domain translations.
Sample sample_instance(const std::string& id, const Interpretation& base, Rng& rng,
                       Strength strength);

}  // namespace elana::oracle

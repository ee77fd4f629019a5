#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "elana/inference/facts.h"

namespace elana::inference {

struct RuleContext {
  Mode mode = Mode::kStrong;
  const Signature* signature = nullptr;
  // Normalized nonemptiness assumptions.
  std::vector<Concept> assumed_nonempty;
  const Interpretation* witness = nullptr;
  int max_depth = 3;
  // Set by a rule when it dropped a conclusion above max_depth.
  mutable bool depth_bound_hit = false;
  // Quadratic rules only pair facts where one id is at least this.
  int first_new = 0;

  mutable std::unordered_map<Concept, std::optional<SideCondition>> discharged;

  std::optional<SideCondition> discharge(const Concept& c) const;
  bool within_depth(const Fact& fact) const;

 private:
  std::optional<SideCondition> discharge_uncached(const Concept& n) const;
};

// Each rule returns candidate derivations (id unset). Duplicates of known
// facts are filtered later by the fact base.
std::vector<Derivation> symmetry(const FactBase& facts, const RuleContext& ctx);
std::vector<Derivation> transitivity_rules(const FactBase& facts, const RuleContext& ctx);
std::vector<Derivation> lift_conjunction(const FactBase& facts, const RuleContext& ctx);
std::vector<Derivation> lift_existential(const FactBase& facts, const RuleContext& ctx);
std::vector<Derivation> rule_translation(const FactBase& facts, const RuleContext& ctx);
std::vector<Derivation> rule_extrapolation(const FactBase& facts, const RuleContext& ctx);
std::vector<Derivation> rule_interpolation(const FactBase& facts, const RuleContext& ctx);

// Single-premise forms. Throw EvaluationError when the role is not
// intra-domain or the target is not natural.
AnalogyAssertion lift_existential_all(const AnalogyAssertion& a, const std::string& role,
                                      const Signature& signature);
AnalogyAssertion lift_existential_tail(const AnalogyAssertion& a, const std::string& role,
                                       const Signature& signature);
// From A ⊑ X, B ⊑ X and D ⊑ A⋈B.
Inclusion interpolate(const Inclusion& a_x, const Inclusion& b_x, const Inclusion& d_btw,
                      const Signature& signature);

}  // namespace elana::inference

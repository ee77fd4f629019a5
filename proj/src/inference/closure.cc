#include "elana/inference/closure.h"

#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/translations.h"

namespace elana::inference {
namespace {

bool holds(const Interpretation& interp, const Fact& fact, const Signature& sig) {
  try {
    if (const auto* ci = std::get_if<Inclusion>(&fact)) {
      return satisfies_ci(interp, ci->lhs, ci->rhs, &sig);
    }
    return satisfies_ana(interp, std::get<AnalogyAssertion>(fact), &sig);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace

std::vector<int> ClosureResult::derived() const {
  std::vector<int> out;
  for (const auto& d : facts.all()) {
    if (d.rule != "asserted") out.push_back(d.id);
  }
  return out;
}

ClosureResult closure(const TBox& tbox, const Interpretation* witness,
                      const ClosureOptions& options) {
  ClosureResult result;
  result.mode = options.mode ? *options.mode : witness ? witness->mode() : Mode::kStrong;
  Signature signature = tbox.signature();
  if (witness) {
    TBoxReport report = satisfies_tbox(*witness, tbox);
    if (!report.model()) {
      for (const auto& item : report.items) {
        if (!item.holds) {
          throw Error("witness is not a model of the TBox: " + item.kind + " " + item.text +
                      (item.detail.empty() ? "" : " (" + item.detail + ")"));
        }
      }
    }
  }

  RuleContext ctx;
  ctx.mode = result.mode;
  ctx.signature = &signature;
  ctx.witness = witness;
  ctx.max_depth = options.max_depth;
  for (const Concept& c : tbox.nonempty()) ctx.assumed_nonempty.push_back(normalize(c));

  FactBase& facts = result.facts;
  auto add = [&](Derivation d, int round) {
    d.round = round;
    if (witness) d.holds_in_witness = holds(*witness, normalize(d.conclusion), signature);
    return facts.add(std::move(d));
  };
  for (const auto& ci : tbox.inclusions()) add(Derivation{-1, ci, "asserted", {}, {}, 0, {}}, 0);
  for (const auto& a : tbox.analogies()) add(Derivation{-1, a, "asserted", {}, {}, 0, {}}, 0);

  using RuleFn = std::vector<Derivation> (*)(const FactBase&, const RuleContext&);
  const RuleFn rules[] = {rule_translation, rule_extrapolation, rule_interpolation, symmetry,
                          transitivity_rules, lift_existential, lift_conjunction};

  int seen_together = 0;
  for (int round = 1;; ++round) {
    const int size_before = static_cast<int>(facts.size());
    ctx.first_new = seen_together;
    std::vector<Derivation> candidates;
    for (RuleFn rule : rules) {
      auto produced = rule(facts, ctx);
      for (auto& d : produced) candidates.push_back(std::move(d));
    }
    bool budget_hit = false;
    for (auto& d : candidates) {
      if (facts.contains(d.conclusion)) continue;
      if (facts.size() >= options.max_facts) {
        budget_hit = true;
        break;
      }
      add(std::move(d), round);
    }
    seen_together = size_before;
    result.rounds = round;
    if (budget_hit) {
      result.bound_reached = true;
      result.bound_detail = "fact budget of " + std::to_string(options.max_facts) + " reached";
      break;
    }
    if (static_cast<int>(facts.size()) == size_before) break;
  }
  if (!result.bound_reached && ctx.depth_bound_hit) {
    result.bound_reached = true;
    result.bound_detail =
        "conclusions deeper than " + std::to_string(options.max_depth) + " were dropped";
  }
  return result;
}

nlohmann::ordered_json to_json(const ClosureResult& result, bool derived_only) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(result.mode);
  j["rounds"] = result.rounds;
  j["bound_reached"] = result.bound_reached;
  j["bound_detail"] = result.bound_detail;
  auto list = nlohmann::ordered_json::array();
  for (const auto& d : result.facts.all()) {
    if (derived_only && d.rule == "asserted") continue;
    list.push_back(to_json(d));
  }
  j["derivations"] = list;
  return j;
}

}  // namespace elana::inference

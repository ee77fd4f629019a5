#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "elana/inference/facts.h"
#include "elana/inference/rules.h"

namespace elana::inference {

struct ClosureOptions {
  int max_depth = 3;
  size_t max_facts = 20000;
  // Defaults to the witness mode, else strong.
  std::optional<Mode> mode;
};

struct ClosureResult {
  FactBase facts;
  Mode mode = Mode::kStrong;
  int rounds = 0;
  bool bound_reached = false;
  std::string bound_detail;

  // Derived facts only (asserted axioms excluded), in derivation order.
  std::vector<int> derived() const;
  int find(const Fact& fact) const { return facts.find(normalize(fact)); }
};

// Applies the rules in rounds until nothing new is derived, the depth bound
// blocks every new conclusion, or the fact budget is spent. Sound, not
// complete. Throws Error when the witness is not a model of the TBox.
ClosureResult closure(const TBox& tbox, const Interpretation* witness = nullptr,
                      const ClosureOptions& options = {});

nlohmann::ordered_json to_json(const ClosureResult& result, bool derived_only = true);

}  // namespace elana::inference

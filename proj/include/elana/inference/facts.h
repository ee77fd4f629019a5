#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "elana/interpretation.h"
#include "elana/tbox.h"

namespace elana::inference {

using Fact = std::variant<Inclusion, AnalogyAssertion>;

// Facts are stored with every concept normalized.
Fact normalize(const Fact& fact);
std::string to_string(const Fact& fact);
std::string to_dl(const Fact& fact);
int nesting_depth(const Fact& fact);

struct SideCondition {
  Concept concept_term;
  std::string discharged_by;  // "assumption" or "witness"
};

struct Derivation {
  int id = -1;
  Fact conclusion;
  std::string rule;  // "asserted" for TBox axioms
  std::vector<int> premises;
  std::vector<SideCondition> side_conditions;
  int round = 0;
  // Set when a witness interpretation was supplied.
  std::optional<bool> holds_in_witness;
};

class FactBase {
 public:
  // Adds a normalized fact; returns its id, or -1 when already present.
  int add(Derivation d);
  int find(const Fact& fact) const;
  bool contains(const Fact& fact) const { return find(fact) >= 0; }
  const Derivation& at(int id) const { return facts_.at(id); }
  Derivation& mutable_at(int id) { return facts_.at(id); }
  const std::vector<Derivation>& all() const { return facts_; }
  size_t size() const { return facts_.size(); }

  const std::vector<int>& inclusions() const { return inclusions_; }
  const std::vector<int>& analogies() const { return analogies_; }
  const Inclusion& inclusion(int id) const { return std::get<Inclusion>(facts_[id].conclusion); }
  const AnalogyAssertion& analogy(int id) const {
    return std::get<AnalogyAssertion>(facts_[id].conclusion);
  }

  // Ids of CIs with this left-hand side.
  std::vector<int> inclusions_from(const Concept& lhs) const;
  // Id of C ⊑ D if present.
  int find_inclusion(const Concept& lhs, const Concept& rhs) const;
  // Id of an assertion over these terms of at least the given strength;
  // a strong assertion also counts as a standard one.
  int find_analogy(const std::array<Concept, 4>& terms, Strength at_least) const;
  // Analogy ids whose first two terms are (a, b).
  std::vector<int> analogies_with_head(const Concept& a, const Concept& b) const;

 private:
  std::vector<Derivation> facts_;
  std::map<Fact, int> index_;
  std::vector<int> inclusions_;
  std::vector<int> analogies_;
  std::multimap<Concept, int> by_lhs_;
  std::multimap<std::pair<Concept, Concept>, int> by_head_;
};

// Text form of a derivation and its premises, innermost first.
std::string explain(const FactBase& facts, int id);
// Rule ids of the whole provenance tree of `id`, asserted excluded.
std::vector<std::string> rules_used(const FactBase& facts, int id);
nlohmann::ordered_json to_json(const Derivation& d);

}  // namespace elana::inference

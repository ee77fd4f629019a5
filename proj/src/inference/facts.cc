#include "elana/inference/facts.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace elana::inference {

Fact normalize(const Fact& fact) {
  if (const auto* ci = std::get_if<Inclusion>(&fact)) {
    return Inclusion{elana::normalize(ci->lhs), elana::normalize(ci->rhs)};
  }
  AnalogyAssertion a = std::get<AnalogyAssertion>(fact);
  for (Concept& t : a.terms) t = elana::normalize(t);
  return a;
}

std::string to_string(const Fact& fact) {
  return std::visit([](const auto& f) { return elana::to_string(f); }, fact);
}

std::string to_dl(const Fact& fact) {
  return std::visit([](const auto& f) { return elana::to_dl(f); }, fact);
}

int nesting_depth(const Fact& fact) {
  if (const auto* ci = std::get_if<Inclusion>(&fact)) {
    return std::max(elana::nesting_depth(ci->lhs), elana::nesting_depth(ci->rhs));
  }
  int depth = 0;
  for (const Concept& t : std::get<AnalogyAssertion>(fact).terms) {
    depth = std::max(depth, elana::nesting_depth(t));
  }
  return depth;
}

int FactBase::add(Derivation d) {
  d.conclusion = normalize(d.conclusion);
  if (index_.count(d.conclusion)) return -1;
  int id = static_cast<int>(facts_.size());
  d.id = id;
  index_.emplace(d.conclusion, id);
  if (const auto* ci = std::get_if<Inclusion>(&d.conclusion)) {
    inclusions_.push_back(id);
    by_lhs_.emplace(ci->lhs, id);
  } else {
    const auto& a = std::get<AnalogyAssertion>(d.conclusion);
    analogies_.push_back(id);
    by_head_.emplace(std::make_pair(a.terms[0], a.terms[1]), id);
  }
  facts_.push_back(std::move(d));
  return id;
}

int FactBase::find(const Fact& fact) const {
  auto it = index_.find(fact);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> FactBase::inclusions_from(const Concept& lhs) const {
  std::vector<int> out;
  auto [lo, hi] = by_lhs_.equal_range(lhs);
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

int FactBase::find_inclusion(const Concept& lhs, const Concept& rhs) const {
  return find(Fact(Inclusion{lhs, rhs}));
}

int FactBase::find_analogy(const std::array<Concept, 4>& terms, Strength at_least) const {
  int strong = find(Fact(AnalogyAssertion{terms, Strength::kStrong}));
  if (at_least == Strength::kStrong) return strong;
  int standard = find(Fact(AnalogyAssertion{terms, Strength::kStandard}));
  if (standard < 0) return strong;
  if (strong < 0) return standard;
  return std::min(standard, strong);
}

std::vector<int> FactBase::analogies_with_head(const Concept& a, const Concept& b) const {
  std::vector<int> out;
  auto [lo, hi] = by_head_.equal_range(std::make_pair(a, b));
  for (auto it = lo; it != hi; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

std::string explain(const FactBase& facts, int id) {
  std::ostringstream out;
  std::set<int> shown;
  std::function<void(int)> visit = [&](int n) {
    if (!shown.insert(n).second) return;
    const Derivation& d = facts.at(n);
    for (int p : d.premises) visit(p);
    out << "[" << d.id << "] " << to_string(d.conclusion) << "  by " << d.rule;
    if (!d.premises.empty()) {
      out << " from";
      for (int p : d.premises) out << " [" << p << "]";
    }
    for (const auto& s : d.side_conditions) {
      out << "; nonempty " << to_sexpr(s.concept_term) << " (" << s.discharged_by << ")";
    }
    if (d.holds_in_witness) {
      out << (*d.holds_in_witness ? "; holds in witness" : "; FAILS in witness");
    }
    out << "\n";
  };
  visit(id);
  return out.str();
}

std::vector<std::string> rules_used(const FactBase& facts, int id) {
  std::vector<std::string> out;
  std::set<int> seen;
  std::function<void(int)> visit = [&](int n) {
    if (!seen.insert(n).second) return;
    const Derivation& d = facts.at(n);
    for (int p : d.premises) visit(p);
    if (d.rule != "asserted" &&
        std::find(out.begin(), out.end(), d.rule) == out.end()) {
      out.push_back(d.rule);
    }
  };
  visit(id);
  return out;
}

nlohmann::ordered_json to_json(const Derivation& d) {
  nlohmann::ordered_json j;
  j["id"] = d.id;
  j["kind"] = std::holds_alternative<Inclusion>(d.conclusion) ? "ci" : "ana";
  j["fact"] = to_string(d.conclusion);
  j["rule"] = d.rule;
  j["premises"] = d.premises;
  auto sides = nlohmann::ordered_json::array();
  for (const auto& s : d.side_conditions) {
    sides.push_back({{"nonempty", to_sexpr(s.concept_term)}, {"discharged_by", s.discharged_by}});
  }
  j["side_conditions"] = sides;
  j["round"] = d.round;
  if (d.holds_in_witness) {
    j["holds_in_witness"] = *d.holds_in_witness;
  } else {
    j["holds_in_witness"] = nullptr;
  }
  return j;
}

}  // namespace elana::inference

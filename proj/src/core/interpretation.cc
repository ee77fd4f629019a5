#include "elana/interpretation.h"

#include "elana/error.h"

namespace elana {

std::string to_string(Mode mode) {
  return mode == Mode::kStrong ? "strong" : "weak";
}

Mode parse_mode(std::string_view text) {
  if (text == "strong") return Mode::kStrong;
  if (text == "weak") return Mode::kWeak;
  throw StructureError("unknown mode '" + std::string(text) + "'");
}

Interpretation::Interpretation(FeatureSpace space, AnalogyStructure analogy,
                               Mode mode, std::vector<ExtraIndividual> extras)
    : mode_(mode) {
  if (analogy.domain_count() != space.domain_count()) {
    throw StructureError("analogy structure does not match the feature space");
  }
  auto u = std::make_shared<Universe>();
  u->space = std::move(space);
  u->analogy = std::move(analogy);
  u->extras = std::move(extras);
  for (FeatureSet f : u->space.consistent_family()) {
    u->canonical.emplace(f.bits(), static_cast<int>(u->individuals.size()));
    u->individuals.push_back({u->space.format(f), f, true});
  }
  u->canonical_count = static_cast<int>(u->individuals.size());
  for (const auto& e : u->extras) {
    if (e.name.empty() || e.name.front() == '{') {
      throw StructureError("extra individual names must not be feature-set literals");
    }
    if (!e.features.subset_of(u->space.all())) {
      throw StructureError("extra individual '" + e.name + "' has unknown features");
    }
    for (const auto& other : u->individuals) {
      if (!other.canonical && other.name == e.name) {
        throw StructureError("duplicate individual '" + e.name + "'");
      }
    }
    u->individuals.push_back({e.name, e.features, false});
  }
  universe_ = std::move(u);
}

Interpretation Interpretation::with_mode(Mode mode) const {
  Interpretation copy = *this;
  copy.mode_ = mode;
  return copy;
}

int Interpretation::canonical_index(FeatureSet f) const {
  auto it = universe_->canonical.find(f.bits());
  return it == universe_->canonical.end() ? -1 : it->second;
}

int Interpretation::find_individual(std::string_view name) const {
  if (!name.empty() && name.front() == '{') {
    if (name.back() != '}') return -1;
    std::string_view body = name.substr(1, name.size() - 2);
    FeatureSet f;
    while (!body.empty()) {
      size_t comma = body.find(',');
      std::string_view part = body.substr(0, comma);
      while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
      while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
      int idx = space().find(part);
      if (idx < 0) return -1;
      f |= FeatureSet::Singleton(idx);
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return canonical_index(f);
  }
  for (int i = canonical_count(); i < individual_count(); ++i) {
    if (individuals()[i].name == name) return i;
  }
  return -1;
}

void Interpretation::set_natural_atom(const std::string& name, FeatureSet features) {
  if (plain_.count(name)) {
    throw StructureError("atom '" + name + "' is already a plain atom");
  }
  if (!features.subset_of(space().all())) {
    throw StructureError("natural atom '" + name + "' has unknown features");
  }
  natural_[name] = features;
  signature_.natural_atoms.insert(name);
}

void Interpretation::set_plain_atom(const std::string& name, IndividualSet members) {
  if (natural_.count(name)) {
    throw StructureError("atom '" + name + "' is already a natural atom");
  }
  if (static_cast<int>(members.size()) != individual_count()) {
    throw StructureError("extension of '" + name + "' has the wrong size");
  }
  plain_[name] = std::move(members);
}

void Interpretation::set_role(const std::string& name,
                              std::vector<std::pair<int, int>> pairs) {
  if (kappa_.count(name)) {
    throw StructureError("role '" + name + "' is already intra-domain");
  }
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= individual_count() || b >= individual_count()) {
      throw StructureError("role '" + name + "' mentions an unknown individual");
    }
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  roles_[name] = std::move(pairs);
}

void Interpretation::set_kappa(const std::string& name, KappaTable kappa) {
  if (roles_.count(name)) {
    throw StructureError("role '" + name + "' is already an ordinary role");
  }
  kappa_[name] = std::move(kappa);
  signature_.intra_roles.insert(name);
}

}  // namespace elana

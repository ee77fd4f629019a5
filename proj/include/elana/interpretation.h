#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "elana/analogy.h"
#include "elana/concept.h"
#include "elana/feature_space.h"
#include "elana/kappa.h"

namespace elana {

enum class Mode { kStrong, kWeak };

std::string to_string(Mode mode);
Mode parse_mode(std::string_view text);

using IndividualSet = boost::dynamic_bitset<>;

struct Individual {
  std::string name;
  FeatureSet features;
  bool canonical = true;
};

struct ExtraIndividual {
  std::string name;
  FeatureSet features;
};

// Feature-enriched, domain-constrained interpretation. The domain holds one
// canonical individual per consistent feature set (in increasing bit order)
// followed by the named extras. Natural atoms carry only their feature set;
// their extension is derived.
class Interpretation {
 public:
  Interpretation() = default;
  Interpretation(FeatureSpace space, AnalogyStructure analogy, Mode mode,
                 std::vector<ExtraIndividual> extras = {});

  const FeatureSpace& space() const { return universe_->space; }
  const AnalogyStructure& analogy() const { return universe_->analogy; }
  Mode mode() const { return mode_; }
  Interpretation with_mode(Mode mode) const;

  const std::vector<Individual>& individuals() const { return universe_->individuals; }
  int individual_count() const { return static_cast<int>(individuals().size()); }
  int canonical_count() const { return universe_->canonical_count; }
  // Index of the canonical individual with these features, or -1.
  int canonical_index(FeatureSet f) const;
  // Extras by name; canonical individuals by their literal, e.g. "{c,y}".
  int find_individual(std::string_view name) const;
  const std::vector<ExtraIndividual>& extras() const { return universe_->extras; }

  IndividualSet empty_set() const { return IndividualSet(individual_count()); }
  IndividualSet full_set() const { return ~empty_set(); }

  void set_natural_atom(const std::string& name, FeatureSet features);
  void set_plain_atom(const std::string& name, IndividualSet members);
  void set_role(const std::string& name, std::vector<std::pair<int, int>> pairs);
  void set_kappa(const std::string& name, KappaTable kappa);

  const std::map<std::string, FeatureSet>& natural_atoms() const { return natural_; }
  const std::map<std::string, IndividualSet>& plain_atoms() const { return plain_; }
  const std::map<std::string, std::vector<std::pair<int, int>>>& roles() const {
    return roles_;
  }
  const std::map<std::string, KappaTable>& kappas() const { return kappa_; }

  // Natural atoms and intra-domain roles of this interpretation.
  const Signature& signature() const { return signature_; }

 private:
  struct Universe {
    FeatureSpace space;
    AnalogyStructure analogy;
    std::vector<Individual> individuals;
    std::vector<ExtraIndividual> extras;
    std::unordered_map<uint64_t, int> canonical;
    int canonical_count = 0;
  };

  std::shared_ptr<const Universe> universe_;
  Mode mode_ = Mode::kStrong;
  std::map<std::string, FeatureSet> natural_;
  std::map<std::string, IndividualSet> plain_;
  std::map<std::string, std::vector<std::pair<int, int>>> roles_;
  std::map<std::string, KappaTable> kappa_;
  Signature signature_;
};

}  // namespace elana

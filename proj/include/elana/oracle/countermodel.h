#pragma once

#include <optional>
#include <string>
#include <variant>

#include "elana/interpretation.h"
#include "elana/io/document.h"
#include "elana/tbox.h"

namespace elana::oracle {

inline constexpr int kSearchFeatureCap = 8;
inline constexpr int kSearchAtomCap = 10;

struct SearchBounds {
  int max_features = 6;
  int max_atoms = 4;
  Mode mode = Mode::kStrong;
  // κ combinations tried per structure before the structure is cut short.
  long max_kappa_choices = 4096;
  int threads = 0;
};

using Query = std::variant<Inclusion, AnalogyAssertion>;

struct SearchResult {
  std::optional<Interpretation> countermodel;
  long structures = 0;   // frames searched
  long assignments = 0;  // leaves re-checked
  bool truncated = false;
  std::string verdict() const;  // "countermodel" or "none within bounds"
  std::string caveat() const;
};

// Enumerates structures with 1..max_features features (block partitions,
// analogy classes, positional bijections, minimal forbidden family, κ
// tables) and natural-atom values from the consistent sets plus the whole
// universe. Returns the first model of `tbox` falsifying `query`, re-checked
// with the validator and the model checker. Only natural atoms and
// intra-domain roles are supported. Throws Error when the bounds exceed the
// caps or the vocabulary does not fit.
SearchResult countermodel_search(const TBox& tbox, const Query& query, const SearchBounds& bounds);

io::Json to_json(const SearchResult& result);

}  // namespace elana::oracle

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "elana/interpretation.h"
#include "elana/translations.h"

namespace elana::oracle {

// mt19937_64 with bounded draws done by hand, so streams are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}
  uint64_t next() { return engine_(); }
  // Uniform in [0, n).
  uint64_t below(uint64_t n);
  // Uniform in [lo, hi].
  int between(int lo, int hi) { return lo + static_cast<int>(below(hi - lo + 1)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

uint64_t mix_seed(uint64_t seed, uint64_t stream);

inline constexpr int kGeneratorFeatureCap = 10;

struct GeneratorParams {
  int max_features = 8;
  int max_domains = 4;
  Mode mode = Mode::kStrong;
  // Forbidden pairs across analogous domains. Defaults to on in strong mode
  // and off in weak mode; strong mode always injects them.
  std::optional<bool> exclusion_pairs;
  double analogy_probability = 0.7;
  double intra_forbidden_probability = 0.3;
  // Forbidden pairs spanning two non-analogous domains.
  int cross_domain_forbidden = 0;
  int natural_atoms = 6;
  double translated_atom_probability = 0.5;
  int intra_roles = 1;
  double tabular_kappa_probability = 0.5;
  int repair_attempts = 8;
};

// Random U whose sources lie in `sources`; each source is mapped with the
// given probability to a free classmate.
DomainTranslation random_translation(const AnalogyStructure& analogy, DomainSet sources,
                                     Rng& rng, double map_probability = 0.7);

// Throws Error when max_features exceeds the cap or no valid structure is
// found within the repair attempts.
Interpretation gen_interpretation(const GeneratorParams& params, uint64_t seed);

}  // namespace elana::oracle

#pragma once

#include <array>
#include <string>
#include <vector>

#include "elana/concept.h"
#include "elana/interpretation.h"

namespace elana {

enum class Strength { kStandard, kStrong };

struct Inclusion {
  Concept lhs;
  Concept rhs;

  bool operator==(const Inclusion&) const = default;
  auto operator<=>(const Inclusion&) const = default;
};

// C1 : C2 :: D1 : D2, "C1 is to C2 what D1 is to D2".
struct AnalogyAssertion {
  std::array<Concept, 4> terms;
  Strength strength = Strength::kStandard;

  bool operator==(const AnalogyAssertion&) const = default;
  auto operator<=>(const AnalogyAssertion&) const = default;
};

AnalogyAssertion make_ana(Concept c1, Concept c2, Concept d1, Concept d2,
                          Strength strength = Strength::kStandard);

std::string to_string(const Inclusion& ci);          // "C <= D"
std::string to_string(const AnalogyAssertion& a);    // "ana C1 : C2 :: D1 : D2"
std::string to_dl(const Inclusion& ci);
std::string to_dl(const AnalogyAssertion& a);

class TBox {
 public:
  const Signature& signature() const { return signature_; }
  void declare_natural(const std::string& atom);
  void declare_intra(const std::string& role);

  void add(Inclusion ci);
  // Throws EvaluationError naming the first non-natural term.
  void add(AnalogyAssertion a);
  void add_nonempty(Concept c);

  const std::vector<Inclusion>& inclusions() const { return inclusions_; }
  const std::vector<AnalogyAssertion>& analogies() const { return analogies_; }
  const std::vector<Concept>& nonempty() const { return nonempty_; }
  bool empty() const {
    return inclusions_.empty() && analogies_.empty() && nonempty_.empty();
  }

  bool operator==(const TBox&) const = default;

 private:
  Signature signature_;
  std::vector<Inclusion> inclusions_;
  std::vector<AnalogyAssertion> analogies_;
  std::vector<Concept> nonempty_;
};

struct AxiomVerdict {
  std::string kind;  // "ci", "ana", "sana", "nonempty", "natural-extension", "role"
  std::string text;
  bool holds = false;
  std::string detail;
};

struct TBoxReport {
  std::vector<AxiomVerdict> items;
  bool model() const;
};

// Model check: CIs, analogy assertions, nonemptiness assumptions, the
// up-set property of every natural concept occurring in the TBox, and κ for its
// intra-domain roles.
TBoxReport satisfies_tbox(const Interpretation& interp, const TBox& tbox);

}  // namespace elana

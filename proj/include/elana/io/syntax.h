#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "elana/concept.h"
#include "elana/error.h"
#include "elana/tbox.h"

namespace elana::io {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// top | bot | NAME | (and C C ...) | (some ROLE C) | (btw C C).
// With a signature, ⋈ operands must be natural under it.
Concept parse_concept(std::string_view text, const Signature* signature = nullptr);

// Line-oriented TBox: natural / intra / ci / ana / sana / nonempty.
TBox parse_tbox(std::string_view text);
std::string print_tbox(const TBox& tbox);

using Axiom = std::variant<Inclusion, AnalogyAssertion>;
// "ci C <= D", "C <= D", "ana C1 : C2 :: D1 : D2" or "sana ...".
Axiom parse_axiom(std::string_view text, const Signature& signature);
// "C1 : C2 :: D1 : D2".
AnalogyAssertion parse_assertion(std::string_view text, const Signature& signature,
                                 Strength strength);
std::string to_string(const Axiom& axiom);

}  // namespace elana::io

#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace elana {

// Immutable concept term. Copies share structure.
class Concept {
 public:
  enum class Kind : uint8_t { kTop, kBottom, kAtom, kAnd, kExists, kBetween };

  Concept();  // top
  static Concept Top();
  static Concept Bottom();
  static Concept Atom(std::string name);
  static Concept And(Concept left, Concept right);
  static Concept Exists(std::string role, Concept filler);
  static Concept Between(Concept left, Concept right);

  Kind kind() const { return node_->kind; }
  bool is(Kind k) const { return node_->kind == k; }
  // Atom name or role name.
  const std::string& name() const { return node_->name; }
  const Concept& left() const { return *node_->left; }
  const Concept& right() const { return *node_->right; }
  const Concept& filler() const { return *node_->left; }
  size_t hash() const { return node_->hash; }

  bool operator==(const Concept& other) const;
  std::strong_ordering operator<=>(const Concept& other) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::unique_ptr<Concept> left;
    std::unique_ptr<Concept> right;
    size_t hash;
  };
  explicit Concept(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Concept Make(Kind kind, std::string name, const Concept* left,
                      const Concept* right);

  std::shared_ptr<const Node> node_;
};

// Which atoms are natural and which roles are intra-domain.
struct Signature {
  std::set<std::string> natural_atoms;
  std::set<std::string> intra_roles;

  bool is_natural(const Concept& c) const;
  // First Between subterm (in prefix order) with a non-natural child.
  std::optional<Concept> ill_formed_subterm(const Concept& c) const;
  void merge(const Signature& other);

  bool operator==(const Signature&) const = default;
};

std::string to_sexpr(const Concept& c);
// DL notation: ⊤, ⊥, ⊓, ∃r.C, ⋈.
std::string to_dl(const Concept& c);

// Canonical form used to compare derived facts: conjunctions flattened,
// deduplicated and sorted, ⊤ dropped, ⊥ absorbing; ⋈ operands sorted.
Concept normalize(const Concept& c);
int nesting_depth(const Concept& c);
void collect_atoms(const Concept& c, std::set<std::string>& atoms);
void collect_roles(const Concept& c, std::set<std::string>& roles);

}  // namespace elana

template <>
struct std::hash<elana::Concept> {
  size_t operator()(const elana::Concept& c) const noexcept { return c.hash(); }
};

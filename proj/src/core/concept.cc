#include "elana/concept.h"

#include <algorithm>
#include <functional>
#include <vector>

namespace elana {
namespace {

size_t mix(size_t seed, size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Concept Concept::Make(Kind kind, std::string name, const Concept* left,
                      const Concept* right) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  size_t h = mix(static_cast<size_t>(kind), std::hash<std::string>{}(node->name));
  if (left) {
    node->left = std::make_unique<Concept>(*left);
    h = mix(h, left->hash());
  }
  if (right) {
    node->right = std::make_unique<Concept>(*right);
    h = mix(h, right->hash());
  }
  node->hash = h;
  return Concept(std::move(node));
}

Concept::Concept() : Concept(Top()) {}

Concept Concept::Top() {
  static const Concept top = Make(Kind::kTop, "", nullptr, nullptr);
  return top;
}

Concept Concept::Bottom() {
  static const Concept bot = Make(Kind::kBottom, "", nullptr, nullptr);
  return bot;
}

Concept Concept::Atom(std::string name) {
  return Make(Kind::kAtom, std::move(name), nullptr, nullptr);
}

Concept Concept::And(Concept left, Concept right) {
  return Make(Kind::kAnd, "", &left, &right);
}

Concept Concept::Exists(std::string role, Concept filler) {
  return Make(Kind::kExists, std::move(role), &filler, nullptr);
}

Concept Concept::Between(Concept left, Concept right) {
  return Make(Kind::kBetween, "", &left, &right);
}

bool Concept::operator==(const Concept& other) const {
  if (node_ == other.node_) return true;
  if (hash() != other.hash()) return false;
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Concept::operator<=>(const Concept& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (auto c = kind() <=> other.kind(); c != 0) return c;
  if (auto c = name() <=> other.name(); c != 0) return c;
  if (node_->left) {
    if (auto c = left() <=> other.left(); c != 0) return c;
  }
  if (node_->right) {
    if (auto c = right() <=> other.right(); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool Signature::is_natural(const Concept& c) const {
  switch (c.kind()) {
    case Concept::Kind::kAtom:
      return natural_atoms.count(c.name()) > 0;
    case Concept::Kind::kAnd:
      return is_natural(c.left()) && is_natural(c.right());
    case Concept::Kind::kExists:
      return intra_roles.count(c.name()) > 0 && is_natural(c.filler());
    case Concept::Kind::kBetween:
      return is_natural(c.left()) && is_natural(c.right());
    default:
      // ⊤ and ⊥ are not produced by the grammar for natural concepts.
      return false;
  }
}

std::optional<Concept> Signature::ill_formed_subterm(const Concept& c) const {
  switch (c.kind()) {
    case Concept::Kind::kAnd:
      if (auto s = ill_formed_subterm(c.left())) return s;
      return ill_formed_subterm(c.right());
    case Concept::Kind::kExists:
      return ill_formed_subterm(c.filler());
    case Concept::Kind::kBetween:
      if (!is_natural(c.left()) || !is_natural(c.right())) return c;
      if (auto s = ill_formed_subterm(c.left())) return s;
      return ill_formed_subterm(c.right());
    default:
      return std::nullopt;
  }
}

void Signature::merge(const Signature& other) {
  natural_atoms.insert(other.natural_atoms.begin(), other.natural_atoms.end());
  intra_roles.insert(other.intra_roles.begin(), other.intra_roles.end());
}

std::string to_sexpr(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kTop:
      return "top";
    case Concept::Kind::kBottom:
      return "bot";
    case Concept::Kind::kAtom:
      return c.name();
    case Concept::Kind::kAnd:
      return "(and " + to_sexpr(c.left()) + " " + to_sexpr(c.right()) + ")";
    case Concept::Kind::kExists:
      return "(some " + c.name() + " " + to_sexpr(c.filler()) + ")";
    case Concept::Kind::kBetween:
      return "(btw " + to_sexpr(c.left()) + " " + to_sexpr(c.right()) + ")";
  }
  return "";
}

std::string to_dl(const Concept& c) {
  auto wrap = [](const Concept& x) {
    std::string s = to_dl(x);
    bool compound = x.is(Concept::Kind::kAnd) || x.is(Concept::Kind::kBetween);
    return compound ? "(" + s + ")" : s;
  };
  switch (c.kind()) {
    case Concept::Kind::kTop:
      return "⊤";
    case Concept::Kind::kBottom:
      return "⊥";
    case Concept::Kind::kAtom:
      return c.name();
    case Concept::Kind::kAnd: {
      // Conjunction is associative; only ⋈ operands get parentheses.
      auto side = [&](const Concept& x) {
        return x.is(Concept::Kind::kBetween) ? "(" + to_dl(x) + ")" : to_dl(x);
      };
      return side(c.left()) + " ⊓ " + side(c.right());
    }
    case Concept::Kind::kExists:
      return "∃" + c.name() + "." + wrap(c.filler());
    case Concept::Kind::kBetween:
      return wrap(c.left()) + " ⋈ " + wrap(c.right());
  }
  return "";
}

namespace {

void flatten_and(const Concept& c, std::vector<Concept>& out) {
  if (c.is(Concept::Kind::kAnd)) {
    flatten_and(c.left(), out);
    flatten_and(c.right(), out);
  } else {
    out.push_back(c);
  }
}

}  // namespace

Concept normalize(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kAnd: {
      std::vector<Concept> parts, raw;
      flatten_and(c, raw);
      for (const Concept& r : raw) flatten_and(normalize(r), parts);
      std::vector<Concept> kept;
      for (const Concept& p : parts) {
        if (p.is(Concept::Kind::kBottom)) return Concept::Bottom();
        if (!p.is(Concept::Kind::kTop)) kept.push_back(p);
      }
      std::sort(kept.begin(), kept.end());
      kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
      if (kept.empty()) return Concept::Top();
      Concept out = kept.back();
      for (size_t i = kept.size() - 1; i-- > 0;) out = Concept::And(kept[i], out);
      return out;
    }
    case Concept::Kind::kExists:
      return Concept::Exists(c.name(), normalize(c.filler()));
    case Concept::Kind::kBetween: {
      Concept l = normalize(c.left()), r = normalize(c.right());
      if (r < l) std::swap(l, r);
      return Concept::Between(l, r);
    }
    default:
      return c;
  }
}

int nesting_depth(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kAnd:
    case Concept::Kind::kBetween:
      return 1 + std::max(nesting_depth(c.left()), nesting_depth(c.right()));
    case Concept::Kind::kExists:
      return 1 + nesting_depth(c.filler());
    default:
      return 0;
  }
}

void collect_atoms(const Concept& c, std::set<std::string>& atoms) {
  switch (c.kind()) {
    case Concept::Kind::kAtom:
      atoms.insert(c.name());
      break;
    case Concept::Kind::kAnd:
    case Concept::Kind::kBetween:
      collect_atoms(c.left(), atoms);
      collect_atoms(c.right(), atoms);
      break;
    case Concept::Kind::kExists:
      collect_atoms(c.filler(), atoms);
      break;
    default:
      break;
  }
}

void collect_roles(const Concept& c, std::set<std::string>& roles) {
  switch (c.kind()) {
    case Concept::Kind::kAnd:
    case Concept::Kind::kBetween:
      collect_roles(c.left(), roles);
      collect_roles(c.right(), roles);
      break;
    case Concept::Kind::kExists:
      roles.insert(c.name());
      collect_roles(c.filler(), roles);
      break;
    default:
      break;
  }
}

}  // namespace elana

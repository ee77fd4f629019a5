#include "elana/evaluator.h"

#include "elana/error.h"

namespace elana {
namespace {

struct Context {
  const Interpretation& interp;
  const Signature* extra;

  bool natural_atom(const std::string& name) const {
    return interp.natural_atoms().count(name) ||
           (extra && extra->natural_atoms.count(name));
  }
  bool intra_role(const std::string& name) const {
    return interp.kappas().count(name) || (extra && extra->intra_roles.count(name));
  }
  bool natural(const Concept& c) const {
    switch (c.kind()) {
      case Concept::Kind::kAtom:
        return natural_atom(c.name());
      case Concept::Kind::kAnd:
      case Concept::Kind::kBetween:
        return natural(c.left()) && natural(c.right());
      case Concept::Kind::kExists:
        return intra_role(c.name()) && natural(c.filler());
      default:
        return false;
    }
  }
  void check_between(const Concept& c) const {
    if (!natural(c.left()) || !natural(c.right())) {
      throw EvaluationError("btw over a non-natural operand: " + to_sexpr(c));
    }
  }
  const KappaTable* kappa(const std::string& role) const {
    auto it = interp.kappas().find(role);
    return it == interp.kappas().end() ? nullptr : &it->second;
  }
  void check_role(const std::string& role) const {
    if (!kappa(role) && !interp.roles().count(role)) {
      throw EvaluationError("undeclared role '" + role + "'");
    }
  }
  void check_atom(const std::string& name) const {
    if (!interp.natural_atoms().count(name) && !interp.plain_atoms().count(name)) {
      throw EvaluationError("unknown atom '" + name + "'");
    }
  }
};

std::optional<FeatureSet> sym(const Context& ctx, const Concept& c) {
  const FeatureSpace& space = ctx.interp.space();
  switch (c.kind()) {
    case Concept::Kind::kTop:
      return FeatureSet();
    case Concept::Kind::kBottom:
      return space.all();
    case Concept::Kind::kAtom: {
      auto it = ctx.interp.natural_atoms().find(c.name());
      if (it != ctx.interp.natural_atoms().end()) return space.normalize(it->second);
      ctx.check_atom(c.name());
      return std::nullopt;
    }
    case Concept::Kind::kAnd: {
      auto l = sym(ctx, c.left());
      auto r = sym(ctx, c.right());
      if (!l || !r) return std::nullopt;
      return space.normalize(*l | *r);
    }
    case Concept::Kind::kBetween: {
      ctx.check_between(c);
      auto l = sym(ctx, c.left());
      auto r = sym(ctx, c.right());
      if (!l || !r) return std::nullopt;
      return space.normalize(*l & *r);
    }
    case Concept::Kind::kExists: {
      ctx.check_role(c.name());
      const KappaTable* k = ctx.kappa(c.name());
      auto inner = sym(ctx, c.filler());
      if (!k || !inner) return std::nullopt;
      return space.normalize(k->apply(space, *inner));
    }
  }
  return std::nullopt;
}

FeatureSet phi_in(const Context& ctx, const Concept& c);

IndividualSet ext(const Context& ctx, const Concept& c) {
  const Interpretation& interp = ctx.interp;
  if (auto s = sym(ctx, c)) return up_set(interp, *s);
  switch (c.kind()) {
    case Concept::Kind::kAtom:
      return interp.plain_atoms().at(c.name());
    case Concept::Kind::kAnd:
      return ext(ctx, c.left()) & ext(ctx, c.right());
    case Concept::Kind::kBetween:
      return up_set(interp, phi_in(ctx, c.left()) & phi_in(ctx, c.right()));
    case Concept::Kind::kExists: {
      if (const KappaTable* k = ctx.kappa(c.name())) {
        return up_set(interp, k->apply(interp.space(), phi_in(ctx, c.filler())));
      }
      IndividualSet filler = ext(ctx, c.filler());
      IndividualSet out = interp.empty_set();
      for (auto [a, b] : interp.roles().at(c.name())) {
        if (filler[b]) out.set(a);
      }
      return out;
    }
    default:
      break;
  }
  throw EvaluationError("cannot evaluate " + to_sexpr(c));
}

FeatureSet phi_in(const Context& ctx, const Concept& c) {
  if (auto s = sym(ctx, c)) return *s;
  return phi_of(ctx.interp, ext(ctx, c));
}

}  // namespace

FeatureSet phi_of(const Interpretation& interp, const IndividualSet& members) {
  FeatureSet out = interp.space().all();
  for (auto i = members.find_first(); i != IndividualSet::npos; i = members.find_next(i)) {
    out &= interp.individuals()[i].features;
  }
  return out;
}

IndividualSet up_set(const Interpretation& interp, FeatureSet f) {
  IndividualSet out = interp.empty_set();
  const auto& inds = interp.individuals();
  for (size_t i = 0; i < inds.size(); ++i) {
    if (f.subset_of(inds[i].features)) out.set(i);
  }
  return out;
}

std::optional<FeatureSet> symbolic_phi(const Interpretation& interp,
                                       const Concept& c, const Signature* extra) {
  return sym(Context{interp, extra}, c);
}

IndividualSet extension(const Interpretation& interp, const Concept& c,
                        const Signature* extra) {
  return ext(Context{interp, extra}, c);
}

FeatureSet phi(const Interpretation& interp, const Concept& c, const Signature* extra) {
  return phi_in(Context{interp, extra}, c);
}

DomainSet delta(const Interpretation& interp, const Concept& c, const Signature* extra) {
  return interp.space().domains_of(phi(interp, c, extra));
}

bool satisfies_ci(const Interpretation& interp, const Concept& lhs,
                  const Concept& rhs, const Signature* extra) {
  Context ctx{interp, extra};
  auto l = sym(ctx, lhs);
  auto r = sym(ctx, rhs);
  if (l && r) return *l == interp.space().all() || r->subset_of(*l);
  IndividualSet el = ext(ctx, lhs);
  return (el - ext(ctx, rhs)).none();
}

bool is_empty(const Interpretation& interp, const Concept& c, const Signature* extra) {
  Context ctx{interp, extra};
  if (auto s = sym(ctx, c)) return *s == interp.space().all();
  return ext(ctx, c).none();
}

}  // namespace elana

#include "elana/tbox.h"

#include <algorithm>
#include <set>

#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/translations.h"
#include "elana/validation.h"

namespace elana {

AnalogyAssertion make_ana(Concept c1, Concept c2, Concept d1, Concept d2,
                          Strength strength) {
  return AnalogyAssertion{{std::move(c1), std::move(c2), std::move(d1), std::move(d2)},
                          strength};
}

std::string to_string(const Inclusion& ci) {
  return to_sexpr(ci.lhs) + " <= " + to_sexpr(ci.rhs);
}

std::string to_string(const AnalogyAssertion& a) {
  return std::string(a.strength == Strength::kStrong ? "sana " : "ana ") +
         to_sexpr(a.terms[0]) + " : " + to_sexpr(a.terms[1]) + " :: " +
         to_sexpr(a.terms[2]) + " : " + to_sexpr(a.terms[3]);
}

std::string to_dl(const Inclusion& ci) {
  return to_dl(ci.lhs) + " ⊑ " + to_dl(ci.rhs);
}

std::string to_dl(const AnalogyAssertion& a) {
  auto term = [](const Concept& c) {
    bool compound = c.is(Concept::Kind::kAnd) || c.is(Concept::Kind::kBetween);
    return compound ? "(" + to_dl(c) + ")" : to_dl(c);
  };
  return std::string(a.strength == Strength::kStrong ? "sana(" : "ana(") +
         term(a.terms[0]) + " : " + term(a.terms[1]) + " :: " + term(a.terms[2]) +
         " : " + term(a.terms[3]) + ")";
}

void TBox::declare_natural(const std::string& atom) {
  signature_.natural_atoms.insert(atom);
}

void TBox::declare_intra(const std::string& role) {
  signature_.intra_roles.insert(role);
}

void TBox::add(Inclusion ci) {
  for (const Concept* c : {&ci.lhs, &ci.rhs}) {
    if (auto bad = signature_.ill_formed_subterm(*c)) {
      throw EvaluationError("btw over a non-natural operand: " + to_sexpr(*bad));
    }
  }
  inclusions_.push_back(std::move(ci));
}

void TBox::add(AnalogyAssertion a) {
  for (const Concept& t : a.terms) {
    if (!signature_.is_natural(t)) {
      throw EvaluationError("analogy assertion over non-natural concept " + to_sexpr(t));
    }
  }
  analogies_.push_back(std::move(a));
}

void TBox::add_nonempty(Concept c) {
  if (auto bad = signature_.ill_formed_subterm(c)) {
    throw EvaluationError("btw over a non-natural operand: " + to_sexpr(*bad));
  }
  nonempty_.push_back(std::move(c));
}

bool TBoxReport::model() const {
  return std::all_of(items.begin(), items.end(),
                     [](const AxiomVerdict& v) { return v.holds; });
}

namespace {

void subterms(const Concept& c, std::set<Concept>& out) {
  out.insert(c);
  switch (c.kind()) {
    case Concept::Kind::kAnd:
    case Concept::Kind::kBetween:
      subterms(c.left(), out);
      subterms(c.right(), out);
      break;
    case Concept::Kind::kExists:
      subterms(c.filler(), out);
      break;
    default:
      break;
  }
}

template <class Fn>
void guarded(TBoxReport& report, AxiomVerdict v, Fn&& fn) {
  try {
    v.holds = fn(v);
  } catch (const Error& e) {
    v.holds = false;
    v.detail = e.what();
  }
  report.items.push_back(std::move(v));
}

}  // namespace

TBoxReport satisfies_tbox(const Interpretation& interp, const TBox& tbox) {
  TBoxReport report;
  const Signature* sig = &tbox.signature();
  const FeatureSpace& space = interp.space();

  for (const Inclusion& ci : tbox.inclusions()) {
    guarded(report, {"ci", to_string(ci), false, ""}, [&](AxiomVerdict& v) {
      IndividualSet lhs = extension(interp, ci.lhs, sig);
      IndividualSet missing = lhs - extension(interp, ci.rhs, sig);
      if (missing.none()) return true;
      v.detail = "counterexample individual " +
                 interp.individuals()[missing.find_first()].name;
      return false;
    });
  }
  for (const AnalogyAssertion& a : tbox.analogies()) {
    guarded(report, {a.strength == Strength::kStrong ? "sana" : "ana", to_string(a), false, ""},
            [&](AxiomVerdict& v) {
              bool ok = satisfies_ana(interp, a, sig);
              if (!ok) {
                auto left = mu(interp, a.terms[0], a.terms[1], sig);
                auto right = mu(interp, a.terms[2], a.terms[3], sig);
                auto fmt = [](const std::vector<DomainTranslation>& us) {
                  std::string s = "{";
                  for (size_t i = 0; i < us.size(); ++i) s += (i ? "," : "") + to_string(us[i]);
                  return s + "}";
                };
                v.detail = "mu(C1,C2)=" + fmt(left) + " mu(D1,D2)=" + fmt(right);
              }
              return ok;
            });
  }
  for (const Concept& c : tbox.nonempty()) {
    guarded(report, {"nonempty", to_sexpr(c), false, ""}, [&](AxiomVerdict&) {
      return !is_empty(interp, c, sig);
    });
  }

  std::set<Concept> natural;
  auto gather = [&](const Concept& c) {
    std::set<Concept> all;
    subterms(c, all);
    for (const Concept& s : all) {
      if (tbox.signature().is_natural(s)) natural.insert(s);
    }
  };
  for (const Inclusion& ci : tbox.inclusions()) {
    gather(ci.lhs);
    gather(ci.rhs);
  }
  for (const AnalogyAssertion& a : tbox.analogies()) {
    for (const Concept& t : a.terms) gather(t);
  }
  for (const Concept& c : tbox.nonempty()) gather(c);
  for (const Concept& n : natural) {
    guarded(report, {"natural-extension", to_sexpr(n), false, ""}, [&](AxiomVerdict& v) {
      IndividualSet members = extension(interp, n, sig);
      FeatureSet common = phi_of(interp, members);
      if (up_set(interp, common) == members) return true;
      v.detail = "extension differs from the individuals having " + space.format(common);
      return false;
    });
  }

  for (const std::string& role : tbox.signature().intra_roles) {
    guarded(report, {"role", role, false, ""}, [&](AxiomVerdict& v) {
      auto it = interp.kappas().find(role);
      if (it == interp.kappas().end()) {
        v.detail = "not interpreted as an intra-domain role";
        return false;
      }
      ValidityReport r;
      validate_kappa(interp, role, it->second, r);
      if (r.valid()) return true;
      v.detail = r.violations.front().message;
      return false;
    });
  }
  return report;
}

}  // namespace elana

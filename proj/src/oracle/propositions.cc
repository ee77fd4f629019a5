#include "elana/oracle/propositions.h"

#include <algorithm>
#include <functional>
#include <map>

#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/proportions.h"
#include "elana/translations.h"

namespace elana::oracle {
namespace {

bool ana(const Interpretation& I, const Concept& a, const Concept& b, const Concept& c,
         const Concept& d, Strength s) {
  return satisfies_ana(I, make_ana(a, b, c, d), s);
}

bool ci(const Interpretation& I, const Concept& a, const Concept& b) {
  return satisfies_ci(I, a, b);
}

bool nonempty(const Interpretation& I, const Concept& c) { return !is_empty(I, c); }

bool contains(const std::vector<DomainTranslation>& set, const DomainTranslation& u) {
  return std::find(set.begin(), set.end(), u) != set.end();
}

using Check = std::function<Verdict(const Interpretation&, const Instantiation&)>;

struct Entry {
  PropositionInfo info;
  Check check;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> e;
    e.push_back({{"ap-rule-translation", 4, false, false,
                  "ap(φA1:φA2::φB1:φB2), A1 <= B1 => A2 <= B2"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   bool p = ap_sets(phi(I, c[0]), phi(I, c[1]), phi(I, c[2]), phi(I, c[3])) &&
                            ci(I, c[0], c[2]);
                   return Verdict{p, ci(I, c[1], c[3])};
                 }});
    e.push_back({{"inversion", 2, false, false,
                  "U in mu(C,D) => inv(U) undoes U on φC and inv(U) in mu(D,C)"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   auto forward = mu(I, c[0], c[1]);
                   auto backward = mu(I, c[1], c[0]);
                   FeatureSet phi_c = phi(I, c[0]);
                   bool ok = true;
                   for (const auto& u : forward) {
                     DomainTranslation v = invert(u);
                     ok = ok && apply(I, v, apply(I, u, phi_c)) == phi_c && contains(backward, v);
                   }
                   return Verdict{!forward.empty(), ok};
                 }});
    auto composed = [](const Interpretation& I, const Instantiation& x, bool superset) {
      const auto& c = x.concepts;
      auto cd = mu(I, c[0], c[1]);
      auto de = mu(I, c[1], c[2]);
      auto ce = mu(I, c[0], c[2]);
      std::vector<DomainTranslation> products;
      bool valid = true;
      for (const auto& u : cd) {
        for (const auto& v : de) {
          try {
            products.push_back(compose(u, v));
          } catch (const TranslationError&) {
            valid = false;
          }
        }
      }
      bool ok;
      if (superset) {
        ok = valid && std::all_of(products.begin(), products.end(),
                                  [&](const DomainTranslation& w) { return contains(ce, w); });
      } else {
        ok = std::all_of(ce.begin(), ce.end(),
                         [&](const DomainTranslation& w) { return contains(products, w); });
      }
      return Verdict{!cd.empty() && !de.empty(), ok};
    };
    e.push_back({{"composition-superset", 3, false, false,
                  "mu(C,D), mu(D,E) nonempty => mu(C,E) contains every U+V"},
                 [composed](const Interpretation& I, const Instantiation& x) {
                   return composed(I, x, true);
                 }});
    e.push_back({{"composition-subset", 3, false, false,
                  "mu(C,D), mu(D,E) nonempty => every member of mu(C,E) is some U+V"},
                 [composed](const Interpretation& I, const Instantiation& x) {
                   return composed(I, x, false);
                 }});
    e.push_back({{"uniqueness", 2, false, false,
                  "C, D nonempty, mu(C,D) nonempty => |mu(C,D)| = 1"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   auto m = mu(I, c[0], c[1]);
                   bool p = nonempty(I, c[0]) && nonempty(I, c[1]) && !m.empty();
                   return Verdict{p, m.size() == 1};
                 }});
    e.push_back({{"symmetry", 4, false, true, "C1:C2::D1:D2 => C2:C1::D2:D1"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   return Verdict{ana(I, c[0], c[1], c[2], c[3], x.strength),
                                  ana(I, c[1], c[0], c[3], c[2], x.strength)};
                 }});
    e.push_back({{"s-transitivity-a", 6, false, true,
                  "C1:C2::D1:D2, D1:D2::E1:E2 => C1:C2::E1:E2"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   bool p = ana(I, c[0], c[1], c[2], c[3], x.strength) &&
                            ana(I, c[2], c[3], c[4], c[5], x.strength);
                   return Verdict{p, ana(I, c[0], c[1], c[4], c[5], x.strength)};
                 }});
    e.push_back({{"s-transitivity-b", 6, false, true,
                  "C1:C2::D1:D2, C2:C3::D2:D3 => C1:C3::D1:D3 (order C1 C2 C3 D1 D2 D3)"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   bool p = ana(I, c[0], c[1], c[3], c[4], x.strength) &&
                            ana(I, c[1], c[2], c[4], c[5], x.strength);
                   return Verdict{p, ana(I, c[0], c[2], c[3], c[5], x.strength)};
                 }});
    e.push_back({{"c-transitivity", 6, false, true,
                  "C1:D1::D2:C2, C1:E1::E2:C2 => D1:E1::E2:D2 (order C1 D1 D2 C2 E1 E2)"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   bool p = ana(I, c[0], c[1], c[2], c[3], x.strength) &&
                            ana(I, c[0], c[4], c[5], c[3], x.strength);
                   return Verdict{p, ana(I, c[1], c[4], c[5], c[2], x.strength)};
                 }});
    e.push_back({{"lift-conjunction", 8, false, true,
                  "C1:C2::C3:C4, D1:D2::D3:D4, Ci and Di nonempty => (C1 and D1):...:(C4 and D4)"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   std::array<Concept, 4> both;
                   bool p = ana(I, c[0], c[1], c[2], c[3], x.strength) &&
                            ana(I, c[4], c[5], c[6], c[7], x.strength);
                   for (int i = 0; i < 4; ++i) {
                     both[i] = Concept::And(c[i], c[i + 4]);
                     p = p && nonempty(I, both[i]);
                   }
                   return Verdict{p, ana(I, both[0], both[1], both[2], both[3], x.strength)};
                 }});
    e.push_back({{"lift-existential-a", 4, true, true,
                  "C:D::E:F => some r.C : some r.D :: some r.E : some r.F"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   auto ex = [&](const Concept& k) { return Concept::Exists(x.role, k); };
                   return Verdict{ana(I, c[0], c[1], c[2], c[3], x.strength),
                                  ana(I, ex(c[0]), ex(c[1]), ex(c[2]), ex(c[3]), x.strength)};
                 }});
    e.push_back({{"lift-existential-b", 4, true, true,
                  "C:D::E:F => C : D :: some r.E : some r.F"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   auto ex = [&](const Concept& k) { return Concept::Exists(x.role, k); };
                   return Verdict{ana(I, c[0], c[1], c[2], c[3], x.strength),
                                  ana(I, c[0], c[1], ex(c[2]), ex(c[3]), x.strength)};
                 }});
    e.push_back({{"rule-translation", 4, false, true,
                  "C1:D1::C2:D2, C1 <= C2 => D1 <= D2"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   bool p = ana(I, c[0], c[1], c[2], c[3], x.strength) && ci(I, c[0], c[2]);
                   return Verdict{p, ci(I, c[1], c[3])};
                 }});
    e.push_back({{"rule-extrapolation", 8, false, true,
                  "C1:C2::C3:C4, D1:D2::D3:D4, D1:D3::D2:D4, Ci <= Di (i<4), C1 nonempty => "
                  "C4 <= D4"},
                 [](const Interpretation& I, const Instantiation& x) {
                   const auto& c = x.concepts;
                   bool p = ana(I, c[0], c[1], c[2], c[3], x.strength) &&
                            ana(I, c[4], c[5], c[6], c[7], x.strength) &&
                            ana(I, c[4], c[6], c[5], c[7], x.strength) && ci(I, c[0], c[4]) &&
                            ci(I, c[1], c[5]) && ci(I, c[2], c[6]) && nonempty(I, c[0]);
                   return Verdict{p, ci(I, c[3], c[7])};
                 }});
    return e;
  }();
  return entries;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry()) {
    if (e.info.id == id) return e;
  }
  throw Error("unknown proposition '" + id + "'");
}

class Builder {
 public:
  Builder(const Interpretation& base, Rng& rng)
      : interp_(base), rng_(rng), family_(base.space().consistent_family()) {}

  Interpretation& interp() { return interp_; }
  const FeatureSpace& space() const { return interp_.space(); }
  const AnalogyStructure& analogy() const { return interp_.analogy(); }

  Concept fresh(FeatureSet f) {
    std::string name = "_s" + std::to_string(counter_++);
    interp_.set_natural_atom(name, f);
    return Concept::Atom(name);
  }
  Concept any() {
    if (!interp_.natural_atoms().empty() && rng_.chance(0.5)) {
      auto it = interp_.natural_atoms().begin();
      std::advance(it, rng_.below(interp_.natural_atoms().size()));
      return Concept::Atom(it->first);
    }
    return fresh(rng_.pick(family_));
  }
  // Prefers a non-identity translation when one exists.
  DomainTranslation translation(DomainSet sources) {
    DomainTranslation u;
    for (int attempt = 0; attempt < 4 && u.empty(); ++attempt) {
      u = random_translation(analogy(), sources, rng_, 0.6);
    }
    return u;
  }
  DomainTranslation translation() { return translation(space().all_domains()); }
  FeatureSet map(const DomainTranslation& u, FeatureSet f) const {
    return elana::apply(space(), analogy(), u, f);
  }
  FeatureSet part(int domain, bool nonempty) {
    std::vector<FeatureSet> options;
    for (FeatureSet f : space().consistent_in_domain(domain)) {
      if (!nonempty || !f.empty()) options.push_back(f);
    }
    if (options.empty()) return FeatureSet();
    return rng_.pick(options);
  }
  // Nonempty in each of `domains`.
  FeatureSet on(DomainSet domains) {
    FeatureSet out;
    for (int d : domains.elements()) out |= part(d, true);
    return out;
  }
  // A set for which U satisfies the source and target conditions.
  FeatureSet for_translation(const DomainTranslation& u) {
    DomainSet blocked = u.targets() - u.sources();
    FeatureSet best;
    for (int attempt = 0; attempt < 6; ++attempt) {
      FeatureSet f = on(u.sources());
      for (int d = 0; d < space().domain_count(); ++d) {
        if (u.sources().contains(d) || blocked.contains(d)) continue;
        if (rng_.chance(0.35)) f |= part(d, true);
      }
      if (f.empty() && u.empty()) f = rng_.pick(family_);
      best = f;
      if (space().consistent(f)) break;
    }
    return best;
  }
  FeatureSet subset_keeping(FeatureSet f, DomainSet keep) {
    FeatureSet out;
    for (int d = 0; d < space().domain_count(); ++d) {
      FeatureSet in = f & space().block(d);
      if (in.empty()) continue;
      FeatureSet pick;
      for (int g : in.elements()) {
        if (rng_.chance(0.5)) pick |= FeatureSet::Singleton(g);
      }
      if (pick.empty() && keep.contains(d)) pick = FeatureSet::Singleton(rng_.pick(in.elements()));
      out |= pick;
    }
    return out;
  }
  FeatureSet superset_within(FeatureSet f, DomainSet blocked) {
    for (int d = 0; d < space().domain_count(); ++d) {
      if (blocked.contains(d)) continue;
      if (rng_.chance(0.3)) f |= part(d, true);
    }
    return f;
  }
  Rng& rng() { return rng_; }

 private:
  Interpretation interp_;
  Rng& rng_;
  std::vector<FeatureSet> family_;
  int counter_ = 0;
};

std::vector<Concept> construct(const std::string& id, Builder& b) {
  Rng& rng = b.rng();
  auto F = [&](FeatureSet f) { return b.fresh(f); };
  if (id == "ap-rule-translation") {
    FeatureSet x = b.on(DomainSet(rng.next()) & b.space().all_domains());
    if (!b.space().consistent(x)) x = FeatureSet();
    FeatureSet y = b.subset_keeping(x, DomainSet());
    FeatureSet p, q;
    for (int f : (b.space().all() - x).elements()) {
      uint64_t r = rng.below(4);
      if (r == 0) p |= FeatureSet::Singleton(f);
      if (r == 1) q |= FeatureSet::Singleton(f);
    }
    return {F(x | p), F(x | q), F(y | p), F(y | q)};
  }
  DomainTranslation u = b.translation();
  FeatureSet c1 = b.for_translation(u);
  FeatureSet c2 = b.map(u, c1);
  DomainSet dom = b.space().domains_of(c1);
  auto partner = [&] { return rng.chance(0.6) ? b.on(dom) : b.for_translation(u); };
  if (id == "inversion" || id == "uniqueness") return {F(c1), F(c2)};
  if (id == "composition-superset" || id == "composition-subset") {
    DomainTranslation v = b.translation(b.space().domains_of(c2));
    return {F(c1), F(c2), F(b.map(v, c2))};
  }
  if (id == "symmetry" || id == "lift-existential-a" || id == "lift-existential-b") {
    FeatureSet d1 = partner();
    return {F(c1), F(c2), F(d1), F(b.map(u, d1))};
  }
  if (id == "s-transitivity-a") {
    FeatureSet d1 = partner(), e1 = partner();
    return {F(c1), F(c2), F(d1), F(b.map(u, d1)), F(e1), F(b.map(u, e1))};
  }
  if (id == "s-transitivity-b") {
    FeatureSet d1 = b.on(dom);
    FeatureSet d2 = b.map(u, d1);
    DomainTranslation v = b.translation(b.space().domains_of(c2));
    return {F(c1), F(c2), F(b.map(v, c2)), F(d1), F(d2), F(b.map(v, d2))};
  }
  if (id == "c-transitivity") {
    // C1:D1::D2:C2 via U, C1:E1::E2:C2 via V
    FeatureSet g = partner();
    FeatureSet c_2 = b.map(u, g);
    DomainTranslation v = rng.chance(0.5) ? u : b.translation(dom);
    FeatureSet e1 = b.map(v, c1);
    FeatureSet e2 = b.map(invert(v), c_2);
    return {F(c1), F(c2), F(g), F(c_2), F(e1), F(e2)};
  }
  if (id == "lift-conjunction") {
    FeatureSet c3 = partner();
    FeatureSet d1 = partner(), d3 = partner();
    return {F(c1), F(c2), F(c3), F(b.map(u, c3)), F(d1), F(b.map(u, d1)), F(d3), F(b.map(u, d3))};
  }
  if (id == "rule-translation") {
    FeatureSet sub = b.subset_keeping(c1, u.sources());
    return {F(c1), F(c2), F(sub), F(b.map(u, sub))};
  }
  if (id == "rule-extrapolation") {
    DomainSet blocked = u.targets() - u.sources();
    FeatureSet g1 = c1;
    FeatureSet f1 = b.superset_within(g1, blocked);
    FeatureSet f3 = b.superset_within(g1, blocked);
    FeatureSet h1 = b.map(u, g1);
    return {F(f1), F(b.map(u, f1)), F(f3), F(b.map(u, f3)), F(g1), F(h1), F(g1), F(h1)};
  }
  throw Error("unknown proposition '" + id + "'");
}

}  // namespace

const std::vector<PropositionInfo>& propositions() {
  static const std::vector<PropositionInfo> infos = [] {
    std::vector<PropositionInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const PropositionInfo& proposition(const std::string& id) { return entry(id).info; }

Verdict check_proposition(const std::string& id, const Interpretation& interp,
                          const Instantiation& inst) {
  const Entry& e = entry(id);
  if (static_cast<int>(inst.concepts.size()) != e.info.arity) {
    throw Error("proposition '" + id + "' takes " + std::to_string(e.info.arity) +
                " concepts, got " + std::to_string(inst.concepts.size()));
  }
  if (e.info.needs_role && !interp.signature().intra_roles.count(inst.role)) {
    throw Error("proposition '" + id + "' needs an intra-domain role, got '" + inst.role + "'");
  }
  return e.check(interp, inst);
}

Sample sample_instance(const std::string& id, const Interpretation& base, Rng& rng,
                       Strength strength) {
  const Entry& e = entry(id);
  Builder b(base, rng);
  Instantiation inst;
  inst.strength = strength;
  if (e.info.needs_role) {
    if (base.kappas().empty()) throw Error("proposition '" + id + "' needs an intra-domain role");
    auto it = base.kappas().begin();
    std::advance(it, rng.below(base.kappas().size()));
    inst.role = it->first;
  }
  if (rng.chance(0.2)) {
    for (int i = 0; i < e.info.arity; ++i) inst.concepts.push_back(b.any());
  } else {
    inst.concepts = construct(id, b);
  }
  return {std::move(b.interp()), std::move(inst)};
}

}  // namespace elana::oracle

#include "elana/inference/rules.h"

#include <algorithm>

#include "elana/error.h"
#include "elana/evaluator.h"

namespace elana::inference {
namespace {

bool is_strong(const AnalogyAssertion& a) { return a.strength == Strength::kStrong; }

bool paired_before(int i, int j, const RuleContext& ctx) {
  return std::max(i, j) < ctx.first_new;
}

void emit(std::vector<Derivation>& out, const RuleContext& ctx, Fact fact, const char* rule,
          std::vector<int> premises, std::vector<SideCondition> sides = {}) {
  fact = normalize(fact);
  if (!ctx.within_depth(fact)) {
    ctx.depth_bound_hit = true;
    return;
  }
  Derivation d;
  d.conclusion = std::move(fact);
  d.rule = rule;
  d.premises = std::move(premises);
  d.side_conditions = std::move(sides);
  out.push_back(std::move(d));
}

AnalogyAssertion assertion(Concept a, Concept b, Concept c, Concept d, Strength s) {
  return make_ana(std::move(a), std::move(b), std::move(c), std::move(d), s);
}

}  // namespace

std::optional<SideCondition> RuleContext::discharge(const Concept& c) const {
  Concept n = elana::normalize(c);
  auto hit = discharged.find(n);
  if (hit != discharged.end()) return hit->second;
  auto result = discharge_uncached(n);
  discharged.emplace(n, result);
  return result;
}

std::optional<SideCondition> RuleContext::discharge_uncached(const Concept& n) const {
  if (std::find(assumed_nonempty.begin(), assumed_nonempty.end(), n) != assumed_nonempty.end()) {
    return SideCondition{n, "assumption"};
  }
  if (witness) {
    try {
      if (!is_empty(*witness, n, signature)) return SideCondition{n, "witness"};
    } catch (const Error&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool RuleContext::within_depth(const Fact& fact) const {
  return nesting_depth(fact) <= max_depth;
}

std::vector<Derivation> symmetry(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  for (int id : facts.analogies()) {
    const auto& t = facts.analogy(id).terms;
    Strength s = facts.analogy(id).strength;
    emit(out, ctx, assertion(t[1], t[0], t[3], t[2], s), "symmetry", {id});
    emit(out, ctx, assertion(t[2], t[3], t[0], t[1], s), "pair_swap", {id});
  }
  return out;
}

std::vector<Derivation> transitivity_rules(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  const bool strong_mode = ctx.mode == Mode::kStrong;
  const auto& anas = facts.analogies();
  // C1:C2::D1:D2, D1:D2::E1:E2 => C1:C2::E1:E2
  for (int i : anas) {
    const auto& a = facts.analogy(i);
    for (int j : facts.analogies_with_head(a.terms[2], a.terms[3])) {
      const auto& b = facts.analogy(j);
      if (is_strong(a) && is_strong(b)) {
        emit(out, ctx, assertion(a.terms[0], a.terms[1], b.terms[2], b.terms[3], Strength::kStrong),
             "transitivity_a", {i, j});
      } else if (strong_mode) {
        emit(out, ctx,
             assertion(a.terms[0], a.terms[1], b.terms[2], b.terms[3], Strength::kStandard),
             "transitivity_a", {i, j});
      }
    }
  }
  // C1:C2::D1:D2, C2:C3::D2:D3 => C1:C3::D1:D3
  for (int i : anas) {
    const auto& a = facts.analogy(i);
    for (int j : anas) {
      if (paired_before(i, j, ctx)) continue;
      const auto& b = facts.analogy(j);
      if (b.terms[0] != a.terms[1] || b.terms[2] != a.terms[3]) continue;
      Strength s = is_strong(a) && is_strong(b) ? Strength::kStrong : Strength::kStandard;
      emit(out, ctx, assertion(a.terms[0], b.terms[1], a.terms[2], b.terms[3], s),
           "transitivity_b", {i, j});
    }
  }
  if (!strong_mode) return out;
  // C1:D1::D2:C2, C1:E1::E2:C2 => D1:E1::E2:D2
  for (int i : anas) {
    const auto& a = facts.analogy(i);
    for (int j : anas) {
      if (paired_before(i, j, ctx)) continue;
      const auto& b = facts.analogy(j);
      if (b.terms[0] != a.terms[0] || b.terms[3] != a.terms[3]) continue;
      emit(out, ctx,
           assertion(a.terms[1], b.terms[1], b.terms[2], a.terms[2], Strength::kStandard),
           "c_transitivity", {i, j});
    }
  }
  return out;
}

namespace {

// Top-level conjuncts of a normalized concept with their depths; Top and
// Bottom terms are left to the general normalizer.
struct Conjuncts {
  std::vector<Concept> ops;
  std::vector<int> depths;
  bool simple = true;
};

Conjuncts conjuncts(const Concept& c) {
  Conjuncts out;
  if (c.is(Concept::Kind::kTop) || c.is(Concept::Kind::kBottom)) {
    out.simple = false;
    return out;
  }
  const Concept* cur = &c;
  while (cur->is(Concept::Kind::kAnd)) {
    out.ops.push_back(cur->left());
    cur = &cur->right();
  }
  out.ops.push_back(*cur);
  for (const auto& o : out.ops) out.depths.push_back(nesting_depth(o));
  return out;
}

// Depth of the normalized conjunction of x and y, and its operands.
int merged_depth(const Conjuncts& x, const Conjuncts& y, std::vector<const Concept*>& ops,
                 std::vector<int>& depths) {
  ops.clear();
  depths.clear();
  size_t i = 0, j = 0;
  while (i < x.ops.size() || j < y.ops.size()) {
    if (j == y.ops.size() || (i < x.ops.size() && x.ops[i] < y.ops[j])) {
      ops.push_back(&x.ops[i]);
      depths.push_back(x.depths[i++]);
    } else if (i == x.ops.size() || y.ops[j] < x.ops[i]) {
      ops.push_back(&y.ops[j]);
      depths.push_back(y.depths[j++]);
    } else {
      ops.push_back(&x.ops[i]);
      depths.push_back(x.depths[i++]);
      ++j;
    }
  }
  int d = depths.back();
  for (size_t k = depths.size() - 1; k-- > 0;) d = 1 + std::max(depths[k], d);
  return d;
}

}  // namespace

std::vector<Derivation> lift_conjunction(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  if (ctx.mode != Mode::kStrong) return out;
  const auto& anas = facts.analogies();
  std::vector<std::array<Conjuncts, 4>> parts(anas.size());
  for (size_t x = 0; x < anas.size(); ++x) {
    for (int k = 0; k < 4; ++k) parts[x][k] = conjuncts(facts.analogy(anas[x]).terms[k]);
  }
  std::vector<const Concept*> ops;
  std::vector<int> depths;
  for (size_t x = 0; x < anas.size(); ++x) {
    for (size_t y = x + 1; y < anas.size(); ++y) {
      int i = anas[x], j = anas[y];
      if (paired_before(i, j, ctx)) continue;
      const auto& a = facts.analogy(i);
      const auto& b = facts.analogy(j);
      std::array<Concept, 4> lifted;
      bool deep = false;
      for (int k = 0; k < 4 && !deep; ++k) {
        const Conjuncts& p = parts[x][k];
        const Conjuncts& q = parts[y][k];
        if (!p.simple || !q.simple) {
          lifted[k] = elana::normalize(Concept::And(a.terms[k], b.terms[k]));
          deep = nesting_depth(lifted[k]) > ctx.max_depth;
          continue;
        }
        if (merged_depth(p, q, ops, depths) > ctx.max_depth) {
          deep = true;
          break;
        }
        Concept c = *ops.back();
        for (size_t m = ops.size() - 1; m-- > 0;) c = Concept::And(*ops[m], c);
        lifted[k] = c;
      }
      if (deep) {
        ctx.depth_bound_hit = true;
        continue;
      }
      Fact fact = AnalogyAssertion{lifted, Strength::kStandard};
      std::vector<SideCondition> sides;
      bool ok = true;
      for (const Concept& c : lifted) {
        auto s = ctx.discharge(c);
        if (!s) {
          ok = false;
          break;
        }
        bool seen = std::any_of(sides.begin(), sides.end(), [&](const SideCondition& o) {
          return o.concept_term == s->concept_term;
        });
        if (!seen) sides.push_back(*s);
      }
      if (ok) emit(out, ctx, fact, "lift_conjunction", {i, j}, std::move(sides));
    }
  }
  return out;
}

AnalogyAssertion lift_existential_all(const AnalogyAssertion& a, const std::string& role,
                                      const Signature& signature) {
  if (!signature.intra_roles.count(role)) {
    throw EvaluationError("role " + role + " is not intra-domain");
  }
  return assertion(Concept::Exists(role, a.terms[0]), Concept::Exists(role, a.terms[1]),
                   Concept::Exists(role, a.terms[2]), Concept::Exists(role, a.terms[3]),
                   Strength::kStandard);
}

AnalogyAssertion lift_existential_tail(const AnalogyAssertion& a, const std::string& role,
                                       const Signature& signature) {
  if (!signature.intra_roles.count(role)) {
    throw EvaluationError("role " + role + " is not intra-domain");
  }
  return assertion(a.terms[0], a.terms[1], Concept::Exists(role, a.terms[2]),
                   Concept::Exists(role, a.terms[3]), Strength::kStandard);
}

std::vector<Derivation> lift_existential(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  if (!ctx.signature) return out;
  for (int id : facts.analogies()) {
    const auto& a = facts.analogy(id);
    for (const auto& role : ctx.signature->intra_roles) {
      emit(out, ctx, lift_existential_all(a, role, *ctx.signature), "lift_existential", {id});
      emit(out, ctx, lift_existential_tail(a, role, *ctx.signature), "lift_existential", {id});
    }
  }
  return out;
}

std::vector<Derivation> rule_translation(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  // C1:D1::C2:D2, C1 ⊑ C2 => D1 ⊑ D2
  for (int id : facts.analogies()) {
    const auto& t = facts.analogy(id).terms;
    int ci = facts.find_inclusion(t[0], t[2]);
    if (ci < 0) continue;
    emit(out, ctx, Inclusion{t[1], t[3]}, "rule_translation", {id, ci});
  }
  return out;
}

std::vector<Derivation> rule_extrapolation(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  if (ctx.mode != Mode::kStrong) return out;
  for (int ai : facts.analogies()) {
    const auto& c = facts.analogy(ai).terms;
    for (int c1 : facts.inclusions_from(c[0])) {
      const Concept& d1 = facts.inclusion(c1).rhs;
      for (int c2 : facts.inclusions_from(c[1])) {
        const Concept& d2 = facts.inclusion(c2).rhs;
        for (int bi : facts.analogies_with_head(d1, d2)) {
          const auto& d = facts.analogy(bi).terms;
          int c3 = facts.find_inclusion(c[2], d[2]);
          if (c3 < 0) continue;
          int cross = facts.find_analogy({d[0], d[2], d[1], d[3]}, Strength::kStandard);
          if (cross < 0) continue;
          auto side = ctx.discharge(c[0]);
          if (!side) continue;
          emit(out, ctx, Inclusion{c[3], d[3]}, "rule_extrapolation", {ai, bi, cross, c1, c2, c3},
               {*side});
        }
      }
    }
  }
  return out;
}

Inclusion interpolate(const Inclusion& a_x, const Inclusion& b_x, const Inclusion& d_btw,
                      const Signature& signature) {
  if (a_x.rhs != b_x.rhs) throw EvaluationError("interpolation premises differ on the target");
  if (!d_btw.rhs.is(Concept::Kind::kBetween)) {
    throw EvaluationError("interpolation needs a premise of the form D <= (btw A B)");
  }
  Concept btw = elana::normalize(d_btw.rhs);
  Concept want = elana::normalize(Concept::Between(a_x.lhs, b_x.lhs));
  if (btw != want) throw EvaluationError("interpolation premises do not match " + to_sexpr(btw));
  if (!signature.is_natural(a_x.rhs)) {
    throw EvaluationError("interpolation target " + to_sexpr(a_x.rhs) + " is not natural");
  }
  return Inclusion{d_btw.lhs, a_x.rhs};
}

std::vector<Derivation> rule_interpolation(const FactBase& facts, const RuleContext& ctx) {
  std::vector<Derivation> out;
  if (!ctx.signature) return out;
  for (int di : facts.inclusions()) {
    const auto& d = facts.inclusion(di);
    if (!d.rhs.is(Concept::Kind::kBetween)) continue;
    const Concept& a = d.rhs.left();
    const Concept& b = d.rhs.right();
    for (int ax : facts.inclusions_from(a)) {
      const Concept& x = facts.inclusion(ax).rhs;
      if (!ctx.signature->is_natural(x)) continue;
      int bx = facts.find_inclusion(b, x);
      if (bx < 0) continue;
      emit(out, ctx, Inclusion{d.lhs, x}, "rule_interpolation", {ax, bx, di});
    }
  }
  return out;
}

}  // namespace elana::inference

#include "elana/oracle/countermodel.h"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <set>
#include <thread>

#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/translations.h"
#include "elana/validation.h"

namespace elana::oracle {
namespace {

struct Frame {
  std::vector<int> sizes;
  std::vector<std::vector<int>> classes;
};

void integer_partitions(int n, int max_part, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    cur.push_back(p);
    integer_partitions(n - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> integer_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  integer_partitions(n, n, cur, out);
  return out;
}

std::vector<Frame> enumerate_frames(int max_features) {
  std::vector<Frame> frames;
  for (int n = 1; n <= max_features; ++n) {
    for (const auto& sizes : integer_partitions(n)) {
      // runs of equal block sizes
      std::vector<std::pair<int, int>> runs;  // (first domain, length)
      for (int d = 0; d < static_cast<int>(sizes.size()); ++d) {
        if (d > 0 && sizes[d] == sizes[d - 1]) {
          ++runs.back().second;
        } else {
          runs.emplace_back(d, 1);
        }
      }
      std::vector<std::vector<std::vector<int>>> per_run;
      for (auto [first, len] : runs) per_run.push_back(integer_partitions(len));
      std::vector<size_t> pick(runs.size(), 0);
      while (true) {
        Frame f;
        f.sizes = sizes;
        for (size_t r = 0; r < runs.size(); ++r) {
          int d = runs[r].first;
          for (int part : per_run[r][pick[r]]) {
            std::vector<int> cls;
            for (int i = 0; i < part; ++i) cls.push_back(d++);
            f.classes.push_back(cls);
          }
        }
        frames.push_back(std::move(f));
        size_t r = 0;
        while (r < runs.size() && ++pick[r] == per_run[r].size()) pick[r++] = 0;
        if (r == runs.size()) break;
      }
    }
  }
  return frames;
}

Interpretation build_frame(const Frame& frame, Mode mode) {
  std::vector<std::string> names;
  std::vector<FeatureSet> blocks;
  for (size_t d = 0; d < frame.sizes.size(); ++d) {
    FeatureSet block;
    for (int i = 0; i < frame.sizes[d]; ++i) {
      block |= FeatureSet::Singleton(static_cast<int>(names.size()));
      names.push_back(std::string(1, static_cast<char>('a' + i)) + std::to_string(d + 1));
    }
    blocks.push_back(block);
  }
  std::vector<DomainPair> generators;
  std::map<DomainPair, FeatureMap> bijections;
  std::vector<FeatureSet> forbidden;
  for (const auto& cls : frame.classes) {
    std::vector<int> rep = blocks[cls[0]].elements();
    for (size_t m = 1; m < cls.size(); ++m) {
      std::vector<int> member = blocks[cls[m]].elements();
      FeatureMap map;
      for (size_t i = 0; i < rep.size(); ++i) map[rep[i]] = member[i];
      generators.emplace_back(cls[0], cls[m]);
      bijections[{cls[0], cls[m]}] = std::move(map);
    }
    if (mode != Mode::kStrong) continue;
    for (size_t i = 0; i < cls.size(); ++i) {
      for (size_t j = i + 1; j < cls.size(); ++j) {
        for (int f : blocks[cls[i]].elements()) {
          for (int g : blocks[cls[j]].elements()) {
            forbidden.push_back(FeatureSet::Singleton(f) | FeatureSet::Singleton(g));
          }
        }
      }
    }
  }
  FeatureSpace space(names, blocks, forbidden);
  AnalogyStructure analogy(space, generators, bijections);
  return Interpretation(space, analogy, mode);
}

// Options for one role over one class representative.
struct RoleSlot {
  std::string role;
  int domain;
  bool additive;
  std::vector<FeatureSet> inputs;  // tabular inputs or features
  std::vector<FeatureSet> images;
  long count() const {
    long c = 1;
    for (size_t i = 0; i < inputs.size(); ++i) {
      c *= static_cast<long>(images.size());
      if (c > (1L << 40)) return c;
    }
    return c;
  }
};

std::vector<RoleSlot> role_slots(const Interpretation& base, const Frame& frame,
                                 const std::vector<std::string>& roles) {
  std::vector<RoleSlot> slots;
  const FeatureSpace& space = base.space();
  const bool additive = *std::max_element(frame.sizes.begin(), frame.sizes.end()) > 2;
  for (const auto& role : roles) {
    for (const auto& cls : frame.classes) {
      RoleSlot slot{role, cls[0], additive, {}, {}};
      for (FeatureSet f : space.consistent_in_domain(cls[0])) {
        if (!f.empty()) slot.images.push_back(f);
      }
      if (additive) {
        for (int f : space.block(cls[0]).elements()) slot.inputs.push_back(FeatureSet::Singleton(f));
      } else {
        slot.inputs = slot.images;
      }
      slots.push_back(std::move(slot));
    }
  }
  return slots;
}

bool query_holds(const Interpretation& I, const Query& q) {
  if (const auto* ci = std::get_if<Inclusion>(&q)) return satisfies_ci(I, ci->lhs, ci->rhs);
  return satisfies_ana(I, std::get<AnalogyAssertion>(q));
}

std::set<std::string> atoms_of(const Query& q) {
  std::set<std::string> out;
  if (const auto* ci = std::get_if<Inclusion>(&q)) {
    collect_atoms(ci->lhs, out);
    collect_atoms(ci->rhs, out);
  } else {
    for (const auto& c : std::get<AnalogyAssertion>(q).terms) collect_atoms(c, out);
  }
  return out;
}

std::set<std::string> roles_of(const Query& q) {
  std::set<std::string> out;
  if (const auto* ci = std::get_if<Inclusion>(&q)) {
    collect_roles(ci->lhs, out);
    collect_roles(ci->rhs, out);
  } else {
    for (const auto& c : std::get<AnalogyAssertion>(q).terms) collect_roles(c, out);
  }
  return out;
}

struct Plan {
  std::vector<std::string> order;
  std::vector<std::string> roles;
  int query_depth;  // index of the last query atom, -1 if none
  // Axioms grouped by the index of their last atom (+1; slot 0: no atoms).
  std::vector<std::vector<Query>> axioms;
  std::vector<std::vector<Concept>> nonempty;
};

Plan make_plan(const TBox& tbox, const Query& query) {
  std::vector<std::pair<std::set<std::string>, std::variant<Query, Concept>>> items;
  std::set<std::string> roles = roles_of(query);
  for (const auto& ci : tbox.inclusions()) items.push_back({atoms_of(ci), Query(ci)});
  for (const auto& a : tbox.analogies()) items.push_back({atoms_of(a), Query(a)});
  for (const auto& c : tbox.nonempty()) {
    std::set<std::string> s;
    collect_atoms(c, s);
    collect_roles(c, roles);
    items.push_back({s, c});
  }
  for (const auto& ci : tbox.inclusions()) {
    collect_roles(ci.lhs, roles);
    collect_roles(ci.rhs, roles);
  }
  for (const auto& a : tbox.analogies()) {
    for (const auto& c : a.terms) collect_roles(c, roles);
  }

  Plan plan;
  std::set<std::string> placed;
  std::set<std::string> q = atoms_of(query);
  for (const auto& a : q) {
    plan.order.push_back(a);
    placed.insert(a);
  }
  plan.query_depth = static_cast<int>(plan.order.size()) - 1;
  while (true) {
    // atom finishing the axiom with the fewest unplaced atoms
    std::string best;
    size_t best_missing = SIZE_MAX;
    for (const auto& [s, _] : items) {
      size_t missing = 0;
      std::string first;
      for (const auto& a : s) {
        if (!placed.count(a)) {
          if (first.empty()) first = a;
          ++missing;
        }
      }
      if (missing > 0 && missing < best_missing) {
        best_missing = missing;
        best = first;
      }
    }
    if (best.empty()) break;
    plan.order.push_back(best);
    placed.insert(best);
  }
  plan.axioms.resize(plan.order.size() + 1);
  plan.nonempty.resize(plan.order.size() + 1);
  for (auto& [s, item] : items) {
    int last = 0;
    for (const auto& a : s) {
      int pos = static_cast<int>(std::find(plan.order.begin(), plan.order.end(), a) -
                                 plan.order.begin());
      last = std::max(last, pos + 1);
    }
    if (const auto* qq = std::get_if<Query>(&item)) {
      plan.axioms[last].push_back(*qq);
    } else {
      plan.nonempty[last].push_back(std::get<Concept>(item));
    }
  }
  plan.roles.assign(roles.begin(), roles.end());
  return plan;
}

class FrameSearch {
 public:
  FrameSearch(const TBox& tbox, const Query& query, const Plan& plan, const SearchBounds& bounds,
              const std::atomic<long>& stop_below)
      : tbox_(tbox), query_(query), plan_(plan), bounds_(bounds), stop_below_(stop_below) {}

  std::optional<Interpretation> run(const Frame& frame, long index) {
    index_ = index;
    Interpretation base = build_frame(frame, bounds_.mode);
    if (!validate_interpretation(base).valid()) return std::nullopt;
    values_ = base.space().consistent_family();
    values_.push_back(base.space().all());
    auto slots = role_slots(base, frame, plan_.roles);
    long total = 1;
    for (const auto& s : slots) {
      total *= s.count();
      if (total > bounds_.max_kappa_choices) break;
    }
    if (total > bounds_.max_kappa_choices) {
      truncated = true;
      total = bounds_.max_kappa_choices;
    }
    std::vector<size_t> digits;
    for (const auto& s : slots) digits.resize(digits.size() + s.inputs.size(), 0);
    for (long k = 0; k < total; ++k) {
      if (stop_below_.load() < index_) return std::nullopt;
      Interpretation interp = base;
      if (!slots.empty()) {
        if (!install_kappa(interp, slots, digits)) {
          advance(slots, digits);
          continue;
        }
        advance(slots, digits);
      }
      if (auto found = assign(interp, 0)) return found;
    }
    return std::nullopt;
  }

  long assignments = 0;
  bool truncated = false;

 private:
  bool install_kappa(Interpretation& interp, const std::vector<RoleSlot>& slots,
                     const std::vector<size_t>& digits) {
    const auto& space = interp.space();
    const auto& analogy = interp.analogy();
    size_t pos = 0;
    for (size_t i = 0; i < slots.size();) {
      const std::string& role = slots[i].role;
      std::map<int, KappaEntries> tables;
      std::map<int, FeatureSet> images;
      bool additive = slots[i].additive;
      for (; i < slots.size() && slots[i].role == role; ++i) {
        const RoleSlot& s = slots[i];
        for (size_t j = 0; j < s.inputs.size(); ++j, ++pos) {
          FeatureSet image = s.images[digits[pos]];
          if (additive) {
            images[s.inputs[j].elements().front()] = image;
          } else {
            tables[s.domain].emplace_back(s.inputs[j], image);
          }
        }
      }
      try {
        interp.set_kappa(role, additive
                                   ? KappaTable::Additive(space, analogy, std::move(images))
                                   : KappaTable::Tabular(space, analogy, std::move(tables)));
      } catch (const Error&) {
        return false;
      }
    }
    return validate_interpretation(interp).valid();
  }

  void advance(const std::vector<RoleSlot>& slots, std::vector<size_t>& digits) {
    size_t pos = 0;
    for (const auto& s : slots) {
      for (size_t j = 0; j < s.inputs.size(); ++j, ++pos) {
        if (++digits[pos] < s.images.size()) return;
        digits[pos] = 0;
      }
    }
  }

  bool level_ok(const Interpretation& I, int level) {
    for (const auto& ax : plan_.axioms[level]) {
      if (!query_holds(I, ax)) return false;
    }
    for (const auto& c : plan_.nonempty[level]) {
      if (is_empty(I, c)) return false;
    }
    return true;
  }

  std::optional<Interpretation> assign(Interpretation& I, int depth) {
    if (depth == 0) {
      if (!level_ok(I, 0)) return std::nullopt;
      if (plan_.query_depth < 0 && query_holds(I, query_)) return std::nullopt;
    }
    if (depth == static_cast<int>(plan_.order.size())) {
      ++assignments;
      if (!validate_interpretation(I).valid()) return std::nullopt;
      if (!satisfies_tbox(I, tbox_).model()) return std::nullopt;
      if (query_holds(I, query_)) return std::nullopt;
      return I;
    }
    for (FeatureSet v : values_) {
      I.set_natural_atom(plan_.order[depth], v);
      if (depth == plan_.query_depth && query_holds(I, query_)) continue;
      if (!level_ok(I, depth + 1)) continue;
      if (auto found = assign(I, depth + 1)) return found;
      if ((assignments & 0xFFF) == 0 && stop_below_.load() < index_) return std::nullopt;
    }
    return std::nullopt;
  }

  const TBox& tbox_;
  const Query& query_;
  const Plan& plan_;
  const SearchBounds& bounds_;
  const std::atomic<long>& stop_below_;
  long index_ = 0;
  std::vector<FeatureSet> values_;
};

}  // namespace

std::string SearchResult::verdict() const {
  return countermodel ? "countermodel" : "none within bounds";
}

std::string SearchResult::caveat() const {
  if (countermodel) return "";
  std::string text =
      "no countermodel within bounds; this does not prove entailment (unbounded models were "
      "not searched)";
  if (truncated) text += "; some κ enumerations were cut short";
  return text;
}

SearchResult countermodel_search(const TBox& tbox, const Query& query,
                                 const SearchBounds& bounds) {
  if (bounds.max_features < 1 || bounds.max_features > kSearchFeatureCap) {
    throw Error("countermodel search: max_features must be in 1.." +
                std::to_string(kSearchFeatureCap));
  }
  if (bounds.max_atoms < 0 || bounds.max_atoms > kSearchAtomCap) {
    throw Error("countermodel search: max_atoms must be in 0.." + std::to_string(kSearchAtomCap));
  }
  Plan plan = make_plan(tbox, query);
  if (static_cast<int>(plan.order.size()) > bounds.max_atoms) {
    throw Error("countermodel search: " + std::to_string(plan.order.size()) +
                " atoms exceed max_atoms " + std::to_string(bounds.max_atoms));
  }
  for (const auto& r : plan.roles) {
    if (!tbox.signature().intra_roles.count(r)) {
      throw Error("countermodel search: role '" + r + "' is not intra-domain");
    }
  }
  for (const auto& a : plan.order) {
    if (!tbox.signature().natural_atoms.count(a)) {
      throw Error("countermodel search: atom '" + a + "' is not declared natural");
    }
  }

  const std::vector<Frame> frames = enumerate_frames(bounds.max_features);
  std::vector<std::optional<Interpretation>> found(frames.size());
  std::atomic<long> next{0};
  std::atomic<long> best{static_cast<long>(frames.size())};
  std::atomic<long> assignments{0};
  std::atomic<long> searched{0};
  std::atomic<bool> truncated{false};
  auto work = [&] {
    FrameSearch search(tbox, query, plan, bounds, best);
    for (long i = next++; i < static_cast<long>(frames.size()); i = next++) {
      if (i > best.load()) break;
      auto result = search.run(frames[i], i);
      ++searched;
      if (result) {
        found[i] = std::move(result);
        long cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
    assignments += search.assignments;
    if (search.truncated) truncated = true;
  };
  int n = bounds.threads > 0 ? bounds.threads : static_cast<int>(std::thread::hardware_concurrency());
  n = std::clamp(n, 1, std::max(1, static_cast<int>(frames.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < n; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SearchResult result;
  result.structures = searched;
  result.assignments = assignments;
  result.truncated = truncated;
  for (auto& f : found) {
    if (f) {
      result.countermodel = std::move(f);
      break;
    }
  }
  return result;
}

io::Json to_json(const SearchResult& result) {
  io::Json j;
  j["verdict"] = result.verdict();
  if (result.countermodel) {
    j["countermodel"] = io::interpretation_to_json(*result.countermodel);
  } else {
    j["caveat"] = result.caveat();
  }
  j["truncated"] = result.truncated;
  return j;
}

}  // namespace elana::oracle

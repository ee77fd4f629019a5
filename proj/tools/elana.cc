#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/inference/closure.h"
#include "elana/io/document.h"
#include "elana/io/syntax.h"
#include "elana/oracle/countermodel.h"
#include "elana/oracle/fixtures.h"
#include "elana/oracle/sweep.h"
#include "elana/proportions.h"
#include "elana/translations.h"
#include "elana/validation.h"

namespace fs = std::filesystem;
using namespace elana;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Globals {
  bool json = false;
  std::string data_dir;
};

fs::path data_dir(const Globals& g) {
  if (!g.data_dir.empty()) return g.data_dir;
  if (const char* env = std::getenv("ELANA_DATA_DIR")) return env;
  return ELANA_DATA_DIR;
}

// A path as given, else a bundled name: "fx-zoo" -> <data>/fx-zoo.json.
fs::path resolve(const Globals& g, const std::string& name, const std::string& ext) {
  if (fs::exists(name)) return name;
  fs::path dir = data_dir(g);
  for (fs::path candidate : {dir / name, dir / (name + ext), dir / "fixtures" / (name + ext)}) {
    if (fs::exists(candidate)) return candidate;
  }
  throw Error("cannot find '" + name + "' (looked in " + dir.string() + ")");
}

Interpretation load_interp(const Globals& g, const std::string& name) {
  return io::load_interpretation(resolve(g, name, ".json"));
}

TBox load_tbox(const Globals& g, const std::string& name) {
  return io::parse_tbox(io::read_file(resolve(g, name, ".tbox")));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::string strength_name(Strength s) { return s == Strength::kStrong ? "strong" : "standard"; }

std::string format_mu(const std::vector<DomainTranslation>& set) {
  std::string out = "{";
  for (size_t i = 0; i < set.size(); ++i) out += (i ? ", " : "") + to_string(set[i]);
  return out + "}";
}

Json mu_json(const std::vector<DomainTranslation>& set) {
  Json a = Json::array();
  for (const auto& u : set) a.push_back(to_string(u));
  return a;
}

int cmd_validate(const Globals& g, const std::string& file) {
  Interpretation I = load_interp(g, file);
  ValidityReport r = validate_interpretation(I);
  if (g.json) {
    Json j;
    j["valid"] = r.valid();
    j["mode"] = to_string(I.mode());
    Json v = Json::array();
    for (const auto& x : r.violations) {
      v.push_back({{"condition", x.condition}, {"message", x.message}, {"witness", x.witness}});
    }
    j["violations"] = v;
    j["notes"] = r.notes;
    emit(j);
  } else {
    std::cout << (r.valid() ? "valid" : "invalid") << " (" << to_string(I.mode()) << " mode, "
              << I.space().feature_count() << " features, " << I.space().domain_count()
              << " domains)\n";
    for (const auto& x : r.violations) {
      std::cout << "  " << x.condition << ": " << x.message;
      if (!x.witness.empty()) std::cout << " [" << x.witness << "]";
      std::cout << "\n";
    }
    for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
  }
  return r.valid() ? kOk : kViolation;
}

int cmd_check(const Globals& g, const std::string& interp, const std::string& tbox) {
  Interpretation I = load_interp(g, interp);
  TBoxReport r = satisfies_tbox(I, load_tbox(g, tbox));
  if (g.json) {
    Json items = Json::array();
    for (const auto& x : r.items) {
      items.push_back(
          {{"kind", x.kind}, {"text", x.text}, {"holds", x.holds}, {"detail", x.detail}});
    }
    emit({{"model", r.model()}, {"items", items}});
  } else {
    for (const auto& x : r.items) {
      std::cout << (x.holds ? "HOLDS " : "FAILS ") << x.kind << " " << x.text;
      if (!x.detail.empty()) std::cout << "  (" << x.detail << ")";
      std::cout << "\n";
    }
    std::cout << (r.model() ? "model" : "not a model") << "\n";
  }
  return r.model() ? kOk : kViolation;
}

int cmd_mu(const Globals& g, const std::string& interp, const std::string& c,
           const std::string& d) {
  Interpretation I = load_interp(g, interp);
  auto set = mu(I, io::parse_concept(c, &I.signature()), io::parse_concept(d, &I.signature()));
  if (g.json) {
    emit({{"lhs", c}, {"rhs", d}, {"mu", mu_json(set)}});
  } else {
    std::cout << format_mu(set) << "\n";
  }
  return kOk;
}

int cmd_ana(const Globals& g, const std::string& interp, const std::string& text, bool strong) {
  Interpretation I = load_interp(g, interp);
  auto a = io::parse_assertion(text, I.signature(), strong ? Strength::kStrong
                                                           : Strength::kStandard);
  bool holds = satisfies_ana(I, a);
  auto left = mu(I, a.terms[0], a.terms[1]);
  auto right = mu(I, a.terms[2], a.terms[3]);
  if (g.json) {
    emit({{"assertion", to_string(a)},
          {"strength", strength_name(a.strength)},
          {"holds", holds},
          {"mu_left", mu_json(left)},
          {"mu_right", mu_json(right)}});
  } else {
    std::cout << (holds ? "HOLDS " : "FAILS ") << to_string(a) << "\n";
    std::cout << "  mu(" << to_sexpr(a.terms[0]) << ", " << to_sexpr(a.terms[1])
              << ") = " << format_mu(left) << "\n";
    std::cout << "  mu(" << to_sexpr(a.terms[2]) << ", " << to_sexpr(a.terms[3])
              << ") = " << format_mu(right) << "\n";
  }
  return holds ? kOk : kViolation;
}

std::set<std::string> parse_name_set(std::string text) {
  for (char& ch : text) {
    if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
  }
  std::istringstream in(text);
  std::set<std::string> out;
  for (std::string item; in >> item;) out.insert(item);
  return out;
}

int cmd_ap(const Globals& g, const std::vector<std::string>& args, const std::string& interp,
           const std::string& level) {
  if (args.size() != 4) throw CLI::ValidationError("ap", "expects exactly four arguments");
  bool holds;
  if (interp.empty()) {
    std::array<std::set<std::string>, 4> names;
    std::set<std::string> universe;
    for (int i = 0; i < 4; ++i) {
      names[i] = parse_name_set(args[i]);
      universe.insert(names[i].begin(), names[i].end());
    }
    if (universe.size() > 64) throw Error("ap: more than 64 distinct elements");
    std::array<FeatureSet, 4> s;
    for (int i = 0; i < 4; ++i) {
      for (const auto& n : names[i]) {
        s[i] |= FeatureSet::Singleton(
            static_cast<int>(std::distance(universe.begin(), universe.find(n))));
      }
    }
    holds = ap_sets(s[0], s[1], s[2], s[3]);
  } else {
    Interpretation I = load_interp(g, interp);
    std::array<Concept, 4> c;
    for (int i = 0; i < 4; ++i) c[i] = io::parse_concept(args[i], &I.signature());
    ApLevel l = level == "extensions" ? ApLevel::kExtensions
                : level == "both"     ? ApLevel::kBoth
                                      : ApLevel::kFeatures;
    holds = ap_concepts(I, c[0], c[1], c[2], c[3], l);
  }
  if (g.json) {
    emit({{"arguments", args}, {"holds", holds}});
  } else {
    std::cout << (holds ? "HOLDS" : "FAILS") << " " << args[0] << " : " << args[1]
              << " :: " << args[2] << " : " << args[3] << "\n";
  }
  return holds ? kOk : kViolation;
}

int cmd_infer(const Globals& g, const std::string& tbox_name, const std::string& witness,
              const inference::ClosureOptions& options, bool all,
              const std::vector<std::string>& explain_facts) {
  TBox tbox = load_tbox(g, tbox_name);
  std::optional<Interpretation> w;
  if (!witness.empty()) w = load_interp(g, witness);
  auto result = inference::closure(tbox, w ? &*w : nullptr, options);
  if (g.json) {
    io::Json doc = inference::to_json(result, !all);
    if (!explain_facts.empty()) {
      // Only the provenance trees of the requested facts.
      doc.erase("derivations");
      io::Json explained = io::Json::array();
      for (const auto& text : explain_facts) {
        auto fact = io::parse_axiom(text, tbox.signature());
        int id = result.find(fact);
        io::Json entry = {{"fact", io::to_string(fact)}, {"derived", id >= 0}};
        io::Json trace = io::Json::array();
        std::set<int> seen;
        std::vector<int> stack;
        if (id >= 0) stack.push_back(id);
        while (!stack.empty()) {
          int cur = stack.back();
          stack.pop_back();
          if (!seen.insert(cur).second) continue;
          for (int p : result.facts.at(cur).premises) stack.push_back(p);
        }
        for (int i : seen) trace.push_back(inference::to_json(result.facts.at(i)));
        entry["trace"] = std::move(trace);
        explained.push_back(std::move(entry));
      }
      doc["explained"] = std::move(explained);
    }
    emit(doc);
    return kOk;
  }
  std::cout << "mode " << to_string(result.mode) << ", " << result.rounds << " rounds, "
            << result.derived().size() << " derived facts";
  if (result.bound_reached) std::cout << ", bound reached: " << result.bound_detail;
  std::cout << "\n";
  for (int id : result.derived()) {
    const auto& d = result.facts.at(id);
    if (!all && !std::holds_alternative<Inclusion>(d.conclusion)) continue;
    std::cout << "[" << id << "] " << inference::to_string(d.conclusion) << "  (";
    auto rules = inference::rules_used(result.facts, id);
    for (size_t i = 0; i < rules.size(); ++i) std::cout << (i ? ", " : "") << rules[i];
    std::cout << ")";
    if (d.holds_in_witness) std::cout << (*d.holds_in_witness ? " holds in witness" : " FAILS in witness");
    std::cout << "\n";
  }
  for (const auto& text : explain_facts) {
    auto fact = io::parse_axiom(text, tbox.signature());
    int id = result.find(fact);
    if (id < 0) {
      std::cout << "\nnot derived: " << text << "\n";
    } else {
      std::cout << "\n" << inference::explain(result.facts, id);
    }
  }
  return kOk;
}

int cmd_countermodel(const Globals& g, const std::string& tbox_name, const std::string& query,
                     const oracle::SearchBounds& bounds) {
  TBox tbox = load_tbox(g, tbox_name);
  auto q = io::parse_axiom(query, tbox.signature());
  auto result = oracle::countermodel_search(tbox, q, bounds);
  if (g.json) {
    emit(oracle::to_json(result));
  } else if (result.countermodel) {
    std::cout << "countermodel\n" << io::print_interpretation(*result.countermodel);
  } else {
    std::cout << result.caveat() << "\n";
  }
  return result.countermodel ? kViolation : kOk;
}

int cmd_props(const Globals& g, const std::string& mode_text, int seeds, int threads) {
  Mode mode = parse_mode(mode_text);
  auto report = oracle::run_divergence_matrix(mode, data_dir(g) / "fixtures", seeds, threads);
  if (g.json) {
    emit(oracle::to_json(report));
  } else {
    for (const auto& c : report.cells) {
      std::string strengths;
      for (Strength s : c.strengths) strengths += (strengths.empty() ? "" : "+") + strength_name(s);
      std::cout << (c.matches() ? "ok       " : "MISMATCH ") << c.rule << " [" << strengths
                << "] expected " << (c.expect_holds ? "HOLDS" : "FAILS") << ", observed "
                << (c.observed_holds ? "HOLDS" : "FAILS") << "  " << c.evidence << "\n";
    }
    std::cout << (report.all_match() ? "matrix matches" : "matrix deviates") << " ("
              << to_string(mode) << " mode)\n";
  }
  return report.all_match() ? kOk : kViolation;
}

int cmd_fixtures(const Globals& g, const std::string& dir, const std::string& only) {
  fs::path path = dir.empty() ? data_dir(g) / "fixtures" : fs::path(dir);
  Json list = Json::array();
  bool all_ok = true;
  for (const auto& f : oracle::load_fixtures(path)) {
    if (!only.empty() && f.id != only) continue;
    auto r = oracle::run_fixture(f);
    all_ok = all_ok && r.ok();
    if (g.json) {
      list.push_back(oracle::to_json(r));
      continue;
    }
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.id << "  " << f.description << "\n";
    for (const auto& v : r.validity_violations) std::cout << "  invalid: " << v << "\n";
    for (const auto& c : r.checks) {
      if (!c.ok) {
        std::cout << "  check " << c.kind << " " << c.text << ": expected " << c.expected
                  << ", got " << c.observed << "\n";
      }
    }
    for (const auto& p : r.propositions) {
      if (!p.ok) std::cout << "  proposition " << p.prop.id << " not reproduced\n";
    }
    if (r.forbidden_derived) std::cout << "  closure derived " << *f.forbidden_derivation << "\n";
    if (!r.closure_error.empty()) std::cout << "  closure error: " << r.closure_error << "\n";
  }
  if (g.json) emit(list);
  return all_ok ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature-enriched description logic toolkit with analogy assertions"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--json", g.json, "Machine-readable output");
  app.add_option("--data-dir", g.data_dir, "Directory of bundled documents (env ELANA_DATA_DIR)");

  std::string interp, tbox, a, b, text, witness, mode_text = "strong", level = "features", dir,
                                                   only;
  std::vector<std::string> args, explain_facts;
  bool strong = false, all = false;
  int seeds = 1000, threads = 0, depth = 3;
  size_t max_facts = 20000;
  std::string infer_mode;
  oracle::SearchBounds bounds;
  std::string search_mode = "strong";

  auto* validate = app.add_subcommand("validate", "Check an interpretation document");
  validate->add_option("interp", interp)->required();

  auto* check = app.add_subcommand("check", "Model-check a TBox in an interpretation");
  check->add_option("interp", interp)->required();
  check->add_option("tbox", tbox)->required();

  auto* mu_cmd = app.add_subcommand("mu", "Enumerate the domain translations from C to D");
  mu_cmd->add_option("interp", interp)->required();
  mu_cmd->add_option("C", a)->required();
  mu_cmd->add_option("D", b)->required();

  auto* ana = app.add_subcommand("ana", "Evaluate an analogy assertion");
  ana->add_option("interp", interp)->required();
  ana->add_option("assertion", text, "\"C1 : C2 :: D1 : D2\"")->required();
  ana->add_flag("--strong", strong);

  auto* ap_cmd = app.add_subcommand("ap", "Analogical proportion over four sets or concepts");
  ap_cmd->add_option("args", args, "four sets like {a,b} or four concepts with --interp")
      ->required()
      ->expected(4);
  ap_cmd->add_option("--interp", interp);
  ap_cmd->add_option("--level", level)->check(CLI::IsMember({"features", "extensions", "both"}));

  auto* infer = app.add_subcommand("infer", "Closure of a TBox under the inference rules");
  infer->add_option("tbox", tbox)->required();
  infer->add_option("--witness", witness);
  infer->add_option("--depth", depth)->check(CLI::Range(1, 16));
  infer->add_option("--max-facts", max_facts);
  infer->add_option("--mode", infer_mode)->check(CLI::IsMember({"strong", "weak"}));
  infer->add_flag("--all", all, "List derived analogy assertions too");
  infer->add_option("--explain", explain_facts, "Print the derivation of a fact");

  auto* cm = app.add_subcommand("countermodel", "Bounded search for a model refuting a query");
  cm->add_option("tbox", tbox)->required();
  cm->add_option("query", text)->required();
  cm->add_option("--max-features", bounds.max_features);
  cm->add_option("--max-atoms", bounds.max_atoms);
  cm->add_option("--mode", search_mode)->check(CLI::IsMember({"strong", "weak"}));
  cm->add_option("--threads", bounds.threads);

  auto* props = app.add_subcommand("props", "Proposition sweeps and the divergence matrix");
  props->add_option("--mode", mode_text)->check(CLI::IsMember({"strong", "weak"}));
  props->add_option("--seeds", seeds)->check(CLI::Range(1, 1000000));
  props->add_option("--threads", threads);

  auto* fixtures = app.add_subcommand("fixtures", "Run the counterexample corpus");
  fixtures->add_option("--dir", dir);
  fixtures->add_option("--id", only);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(g, interp);
    if (*check) return cmd_check(g, interp, tbox);
    if (*mu_cmd) return cmd_mu(g, interp, a, b);
    if (*ana) return cmd_ana(g, interp, text, strong);
    if (*ap_cmd) return cmd_ap(g, args, interp, level);
    if (*infer) {
      inference::ClosureOptions o;
      o.max_depth = depth;
      o.max_facts = max_facts;
      if (!infer_mode.empty()) o.mode = parse_mode(infer_mode);
      return cmd_infer(g, tbox, witness, o, all, explain_facts);
    }
    if (*cm) {
      bounds.mode = parse_mode(search_mode);
      return cmd_countermodel(g, tbox, text, bounds);
    }
    if (*props) return cmd_props(g, mode_text, seeds, threads);
    if (*fixtures) return cmd_fixtures(g, dir, only);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

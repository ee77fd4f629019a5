#include "elana/oracle/sweep.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "elana/error.h"
#include "elana/evaluator.h"
#include "elana/inference/facts.h"
#include "elana/oracle/fixtures.h"

namespace elana::oracle {
namespace {

std::string strength_name(Strength s) { return s == Strength::kStrong ? "strong" : "standard"; }

struct SeedOutcome {
  bool generator_error = false;
  bool premises = false;
  bool fails = false;
  std::string detail;
};

std::string describe(const Sample& s, const std::string& id) {
  std::string out = id + " on";
  for (const auto& c : s.inst.concepts) {
    out += " " + to_dl(c) + "=" + s.interp.space().format(phi(s.interp, c));
  }
  if (!s.inst.role.empty()) out += " role " + s.inst.role;
  return out;
}

int worker_count(int requested, int jobs) {
  int n = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(n, 1, std::max(1, jobs));
}

}  // namespace

Sample replay_seed(const SweepOptions& options, int seed) {
  uint64_t s = mix_seed(options.base_seed, static_cast<uint64_t>(seed));
  Interpretation base = gen_interpretation(options.params, s);
  Rng rng(mix_seed(s, 0xC0FFEE));
  return sample_instance(options.proposition, base, rng, options.strength);
}

SweepResult run_sweep(const SweepOptions& options) {
  proposition(options.proposition);  // unknown ids throw here
  const int n = std::max(0, options.seeds);
  std::vector<SeedOutcome> outcomes(n);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int i = next++; i < n; i = next++) {
      SeedOutcome& out = outcomes[i];
      Sample sample;
      try {
        sample = replay_seed(options, i);
      } catch (const Error& e) {
        out.generator_error = true;
        out.detail = e.what();
        continue;
      }
      Verdict v = check_proposition(options.proposition, sample.interp, sample.inst);
      out.premises = v.premises_hold;
      out.fails = v.fails();
      if (out.fails) out.detail = describe(sample, options.proposition);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < worker_count(options.threads, n); ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  SweepResult r;
  r.proposition = options.proposition;
  r.mode = options.params.mode;
  r.strength = options.strength;
  for (int i = 0; i < n; ++i) {
    const auto& o = outcomes[i];
    if (o.generator_error) {
      ++r.generator_errors;
      if (!r.first_failing_seed) {
        r.first_failing_seed = i;
        r.first_failure = o.detail;
      }
      continue;
    }
    ++r.instances;
    if (o.premises) ++r.non_vacuous;
    if (o.fails) {
      ++r.failures;
      if (!r.first_failing_seed) {
        r.first_failing_seed = i;
        r.first_failure = o.detail;
      }
    }
  }
  return r;
}

io::Json to_json(const SweepResult& r) {
  io::Json j;
  j["proposition"] = r.proposition;
  j["mode"] = to_string(r.mode);
  j["strength"] = strength_name(r.strength);
  j["instances"] = r.instances;
  j["non_vacuous"] = r.non_vacuous;
  j["failures"] = r.failures;
  j["generator_errors"] = r.generator_errors;
  j["holds"] = r.holds();
  if (r.first_failing_seed) {
    j["first_failing_seed"] = *r.first_failing_seed;
    j["first_failure"] = r.first_failure;
  }
  return j;
}

bool MatrixReport::all_match() const {
  return std::all_of(cells.begin(), cells.end(), [](const MatrixCell& c) { return c.matches(); });
}

MatrixReport run_divergence_matrix(Mode mode, const std::filesystem::path& fixture_dir, int seeds,
                                   int threads) {
  MatrixReport report;
  report.mode = mode;
  const Strength S = Strength::kStandard, T = Strength::kStrong;

  auto sweep_cell = [&](std::string rule, std::vector<std::string> ids,
                        std::vector<Strength> strengths) {
    MatrixCell cell{std::move(rule), std::move(ids), std::move(strengths), true, true, "", {}};
    std::string summary;
    for (const auto& id : cell.propositions) {
      for (Strength s : cell.strengths) {
        SweepOptions o;
        o.proposition = id;
        o.strength = s;
        o.seeds = seeds;
        o.threads = threads;
        o.params.mode = mode;
        SweepResult r = run_sweep(o);
        cell.observed_holds = cell.observed_holds && r.holds();
        summary += (summary.empty() ? "" : "; ") + id + "/" + strength_name(s) + " " +
                   std::to_string(r.failures) + " failures in " + std::to_string(r.instances) +
                   " (" + std::to_string(r.non_vacuous) + " non-vacuous)";
        cell.sweeps.push_back(std::move(r));
      }
    }
    cell.evidence = "sweep: " + summary;
    report.cells.push_back(std::move(cell));
  };

  if (mode == Mode::kStrong) {
    for (const auto& info : propositions()) {
      std::vector<Strength> strengths{S};
      if (info.uses_strength) strengths.push_back(T);
      sweep_cell(info.id, {info.id}, strengths);
    }
    return report;
  }

  std::vector<Fixture> fixtures;
  std::string load_error;
  try {
    fixtures = load_fixtures(fixture_dir);
  } catch (const Error& e) {
    load_error = e.what();
  }
  auto fixture_cell = [&](std::string rule, std::vector<std::string> ids,
                          std::vector<Strength> strengths, std::string fixture_id) {
    MatrixCell cell{std::move(rule), std::move(ids), std::move(strengths), false, true, fixture_id,
                    {}};
    auto fx = find_fixture(fixtures, fixture_id);
    if (!fx) {
      cell.evidence = fixture_id + " missing" + (load_error.empty() ? "" : " (" + load_error + ")");
    } else {
      FixtureReport r = run_fixture(*fx);
      bool all = true;
      for (const auto& id : cell.propositions) {
        for (Strength s : cell.strengths) all = all && reproduces(r, id, s);
      }
      cell.observed_holds = !all;
      if (!all) cell.evidence = fixture_id + " did not reproduce";
    }
    report.cells.push_back(std::move(cell));
  };

  fixture_cell("c-transitivity", {"c-transitivity"}, {S}, "CE-CTRANS-WEAK-1");
  fixture_cell("c-transitivity", {"c-transitivity"}, {T}, "CE-CTRANS-WEAK-2");
  fixture_cell("s-transitivity-a", {"s-transitivity-a"}, {S}, "CE-STRANS-WEAK");
  sweep_cell("s-transitivity-a", {"s-transitivity-a"}, {T});
  sweep_cell("s-transitivity-b", {"s-transitivity-b"}, {S, T});
  sweep_cell("lift-existential", {"lift-existential-a", "lift-existential-b"}, {S});
  fixture_cell("lift-existential", {"lift-existential-a", "lift-existential-b"}, {T},
               "CE-LIFTEXISTS-STRONG");
  fixture_cell("lift-conjunction", {"lift-conjunction"}, {S, T}, "CE-LIFTCONJ-WEAK");
  sweep_cell("rule-translation", {"rule-translation"}, {S});
  fixture_cell("rule-extrapolation", {"rule-extrapolation"}, {S, T}, "CE-EXTRAP-WEAK");
  return report;
}

io::Json to_json(const MatrixReport& report) {
  io::Json j;
  j["mode"] = to_string(report.mode);
  j["all_match"] = report.all_match();
  auto cells = io::Json::array();
  for (const auto& c : report.cells) {
    io::Json cell;
    cell["rule"] = c.rule;
    auto strengths = io::Json::array();
    for (Strength s : c.strengths) strengths.push_back(strength_name(s));
    cell["strengths"] = strengths;
    cell["expected"] = c.expect_holds ? "HOLDS" : "FAILS";
    cell["observed"] = c.observed_holds ? "HOLDS" : "FAILS";
    cell["evidence"] = c.evidence;
    cell["matches"] = c.matches();
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return j;
}

}  // namespace elana::oracle

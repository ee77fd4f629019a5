#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "elana/io/document.h"
#include "elana/oracle/generator.h"
#include "elana/oracle/propositions.h"

namespace elana::oracle {

struct SweepOptions {
  std::string proposition;
  Strength strength = Strength::kStandard;
  int seeds = 1000;
  uint64_t base_seed = 0;
  GeneratorParams params;  // params.mode selects the semantics
  int threads = 0;         // 0: hardware concurrency
};

struct SweepResult {
  std::string proposition;
  Mode mode = Mode::kStrong;
  Strength strength = Strength::kStandard;
  int instances = 0;
  int non_vacuous = 0;  // premises held
  int failures = 0;
  int generator_errors = 0;
  std::optional<int> first_failing_seed;
  std::string first_failure;
  bool holds() const { return failures == 0 && generator_errors == 0; }
};

// Seed i draws an interpretation from mix_seed(base_seed, i) and one
// instantiation from it. Workers split the seeds; results are merged in seed
// order, so the outcome does not depend on the thread count.
SweepResult run_sweep(const SweepOptions& options);

// Replays one seed of a sweep and returns the sampled interpretation and
// instantiation.
Sample replay_seed(const SweepOptions& options, int seed);

io::Json to_json(const SweepResult& result);

struct MatrixCell {
  std::string rule;
  std::vector<std::string> propositions;
  std::vector<Strength> strengths;
  bool expect_holds = true;
  bool observed_holds = true;
  std::string evidence;  // fixture id or sweep summary
  std::vector<SweepResult> sweeps;
  bool matches() const { return expect_holds == observed_holds; }
};

struct MatrixReport {
  Mode mode = Mode::kStrong;
  std::vector<MatrixCell> cells;
  bool all_match() const;
};

// Weak mode: the rule/strength cells where the two semantics part ways, a
// FAILS cell backed by its counterexample fixture and a HOLDS cell by a
// sweep. Strong mode: every proposition at every strength is swept.
MatrixReport run_divergence_matrix(Mode mode, const std::filesystem::path& fixture_dir,
                                   int seeds = 1000, int threads = 0);

io::Json to_json(const MatrixReport& report);

}  // namespace elana::oracle

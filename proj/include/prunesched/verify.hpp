#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prunesched/instance.hpp"
#include "prunesched/schedule.hpp"

namespace prunesched {

// A generated proper schedule with a deliberately unbalanced prefix: an
// admissible swap is guaranteed at `step`. The schedule is leveled (final
// loads within p_max) and, for Wtardy, feasible with a possibly non-empty
// discarded set.
struct SwapScenario {
  Instance instance;
  ProperSchedule schedule;
  int step = 0;  // 1-based
};

SwapScenario make_unbalanced_scenario(Objective objective, int machines, std::int64_t pmax,
                                      std::uint64_t seed);

struct VerifyParams {
  int trials = 100;
  std::vector<int> n_list = {8};  // trials cycle through this list
  int m = 2;
  std::int64_t pmax = 4;
  std::int64_t wmax = 5;
  DueMode due = DueMode::Tight;
  std::uint64_t seed = 1;
  std::vector<Objective> objectives;  // empty = all three
  bool self_test = false;
  int threads = 0;  // 0 = PRUNESCHED_THREADS or hardware concurrency
};

struct VerifyFailure {
  int trial = 0;
  Objective objective = Objective::Wct;
  std::string reason;
  std::string instance_text;  // reproducer in instance-file format
};

struct VerifyReport {
  int passed = 0;
  int total = 0;
  std::vector<VerifyFailure> failures;
};

// Per trial: generates a seeded instance; checks classic/pruned value
// equality (and the oracle when within its enumeration cap) and the pruned
// layer-count bound for each selected objective; then runs the
// swap-optimality property check on a generated unbalanced schedule.
// Trials may run on parallel workers; the report is deterministic.
VerifyReport run_verification(const VerifyParams& params);

// PRUNESCHED_THREADS environment cap, falling back to hardware concurrency.
int worker_count();

}  // namespace prunesched

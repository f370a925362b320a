#include "prunesched/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <sstream>
#include <thread>

#include "prunesched/oracle.hpp"
#include "prunesched/rng.hpp"
#include "prunesched/solver.hpp"
#include "prunesched/swap.hpp"

namespace prunesched {

namespace {

struct Slot {
  std::int64_t p = 1;
  int machine = kDiscarded;
};

bool identity_order(const PriorityOrder& order) {
  for (std::size_t k = 0; k < order.perm.size(); ++k)
    if (order.perm[k] != static_cast<int>(k)) return false;
  return true;
}

bool within_oracle_cap(const Instance& instance, Objective objective, std::int64_t cap) {
  const int radix = instance.machines() + (objective == Objective::Wtardy ? 1 : 0);
  __int128 count = 1;
  for (int j = 0; j < instance.job_count(); ++j) {
    count *= radix;
    if (count > __int128(cap)) return false;
  }
  return true;
}

}  // namespace

SwapScenario make_unbalanced_scenario(Objective objective, int machines, std::int64_t pmax,
                                      std::uint64_t seed) {
  if (machines < 2) throw ValidationError("swap scenarios need at least 2 machines");
  if (pmax < 1) throw ValidationError("swap scenarios need pmax >= 1");

  SplitMix64 rng(seed);
  const std::int64_t threshold = 4 * pmax * pmax;
  std::vector<Slot> slots;
  std::vector<std::int64_t> load(static_cast<std::size_t>(machines), 0);

  // A short head start on the non-donor machines keeps t_i interesting.
  for (int i = 1; i < machines; ++i) {
    const auto count = rng.uniform(0, 2);
    for (std::int64_t k = 0; k < count; ++k) {
      const std::int64_t p = rng.uniform(1, pmax);
      slots.push_back({p, i});
      load[static_cast<std::size_t>(i)] += p;
    }
  }

  // Donor run on machine 0 until its prefix load clears every other machine
  // by the admissibility threshold.
  const std::int64_t extra = rng.uniform(0, pmax);
  const std::int64_t other_max = *std::max_element(load.begin() + 1, load.end());
  while (load[0] < other_max + threshold + extra) {
    const std::int64_t p = rng.uniform(1, pmax);
    slots.push_back({p, 0});
    load[0] += p;
  }
  const int step = static_cast<int>(slots.size());  // j*, 1-based

  // Future jobs: every non-donor machine receives at least 2*pmax, shuffled
  // so J_I composition varies.
  std::vector<Slot> future;
  for (int i = 1; i < machines; ++i) {
    const std::int64_t count = 2 * pmax + rng.uniform(0, 4);
    for (std::int64_t k = 0; k < count; ++k) future.push_back({rng.uniform(1, pmax), i});
  }
  for (std::size_t k = future.size(); k > 1; --k) {
    const auto swap_with = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(k) - 1));
    std::swap(future[k - 1], future[swap_with]);
  }
  for (const Slot& slot : future) {
    slots.push_back(slot);
    load[static_cast<std::size_t>(slot.machine)] += slot.p;
  }

  // For Wtardy, a few discarded positions after the swap window.
  if (objective == Objective::Wtardy) {
    const auto count = rng.uniform(0, 3);
    for (std::int64_t k = 0; k < count; ++k) slots.push_back({rng.uniform(1, pmax), kDiscarded});
  }

  // Level the final loads so the schedule satisfies the leveled precondition
  // of the structural lemmas; fillers sit after j* and leave the prefix gap
  // intact.
  const std::int64_t top = *std::max_element(load.begin(), load.end());
  for (int i = 0; i < machines; ++i) {
    while (top - load[static_cast<std::size_t>(i)] > pmax) {
      const std::int64_t p = std::min(pmax, top - load[static_cast<std::size_t>(i)]);
      slots.push_back({p, i});
      load[static_cast<std::size_t>(i)] += p;
    }
  }

  const int n = static_cast<int>(slots.size());
  std::vector<Job> jobs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) jobs[static_cast<std::size_t>(k)].p = slots[static_cast<std::size_t>(k)].p;

  switch (objective) {
    case Objective::Wct: {
      // Non-increasing integer efficiency levels keep the input order Smith.
      std::int64_t level = rng.uniform(1, 6);
      for (int k = 0; k < n; ++k) {
        if (level > 0 && rng.uniform(0, 3) == 0) level -= rng.uniform(0, 1);
        jobs[static_cast<std::size_t>(k)].w = level * jobs[static_cast<std::size_t>(k)].p;
        jobs[static_cast<std::size_t>(k)].d = 0;
      }
      break;
    }
    case Objective::Lmax: {
      std::int64_t due = rng.uniform(0, 3);
      for (int k = 0; k < n; ++k) {
        due += rng.uniform(0, 3);
        jobs[static_cast<std::size_t>(k)].d = due;
        jobs[static_cast<std::size_t>(k)].w = rng.uniform(0, 5);
      }
      break;
    }
    case Objective::Wtardy: {
      // Non-decreasing due dates that cover each scheduled job's completion
      // time keep the schedule feasible and the input order EDD.
      std::vector<std::int64_t> running(static_cast<std::size_t>(machines), 0);
      std::int64_t due = 0;
      for (int k = 0; k < n; ++k) {
        const Slot& slot = slots[static_cast<std::size_t>(k)];
        if (slot.machine != kDiscarded) {
          running[static_cast<std::size_t>(slot.machine)] += slot.p;
          due = std::max(due, running[static_cast<std::size_t>(slot.machine)] + rng.uniform(0, 2));
        }
        jobs[static_cast<std::size_t>(k)].d = due;
        jobs[static_cast<std::size_t>(k)].w = rng.uniform(0, 5);
      }
      break;
    }
  }

  SwapScenario scenario{Instance::create(machines, std::move(jobs)), {}, step};
  scenario.schedule.order = priority_order(scenario.instance, objective);
  if (!identity_order(scenario.schedule.order))
    throw InternalError("scenario priority order is not the identity");
  scenario.schedule.assign.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    scenario.schedule.assign[static_cast<std::size_t>(k)] = slots[static_cast<std::size_t>(k)].machine;
  return scenario;
}

int worker_count() {
  if (const char* env = std::getenv("PRUNESCHED_THREADS")) {
    const int parsed = std::atoi(env);
    if (parsed >= 1) return parsed;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

std::vector<VerifyFailure> run_trial(const VerifyParams& params,
                                     const std::vector<Objective>& objectives, int trial) {
  std::vector<VerifyFailure> failures;
  const int n = params.n_list[static_cast<std::size_t>(trial) % params.n_list.size()];
  GenParams gen;
  gen.n = n;
  gen.m = params.m;
  gen.pmax = params.pmax;
  gen.wmax = params.wmax;
  gen.due = params.due;
  gen.seed = mix_seed(params.seed, static_cast<std::uint64_t>(trial));
  const Instance instance = generate_instance(gen);

  const auto fail = [&](Objective objective, std::string reason, const Instance& bad) {
    failures.push_back({trial, objective, std::move(reason), serialize_instance(bad)});
  };

  for (std::size_t oi = 0; oi < objectives.size(); ++oi) {
    const Objective objective = objectives[oi];
    SolveOptions fast{.reconstruct = false};
    SolveOptions pruned_options{.reconstruct = false};
    pruned_options.bias_last_job = params.self_test;

    const auto classic = solve_classic(instance, objective, fast);
    const auto pruned = solve_pruned(instance, objective, pruned_options);
    if (classic.value != pruned.value) {
      fail(objective,
           "value mismatch: classic=" + std::to_string(classic.value) +
               " pruned=" + std::to_string(pruned.value),
           instance);
      continue;
    }

    const std::int64_t bound = state_bound(instance, objective);
    for (std::size_t layer = 0; layer < pruned.stats.layer_states.size(); ++layer) {
      if (pruned.stats.layer_states[layer] > bound) {
        fail(objective,
             "layer " + std::to_string(layer + 1) + " holds " +
                 std::to_string(pruned.stats.layer_states[layer]) + " states, bound " +
                 std::to_string(bound),
             instance);
        break;
      }
    }

    if (within_oracle_cap(instance, objective, OracleOptions{}.enumeration_cap)) {
      const auto oracle = brute_force(instance, objective);
      if (oracle.value != classic.value) {
        fail(objective,
             "value mismatch: oracle=" + std::to_string(oracle.value) +
                 " classic=" + std::to_string(classic.value),
             instance);
      }
    }

    // Swap-optimality property on a dedicated unbalanced schedule.
    const auto scenario = make_unbalanced_scenario(
        objective, params.m, params.pmax,
        mix_seed(params.seed, static_cast<std::uint64_t>(trial) * 8 + oi + 1));
    const auto plan =
        find_admissible_swap(scenario.schedule, scenario.step, scenario.instance);
    if (!plan) {
      fail(objective, "scenario produced no admissible swap", scenario.instance);
      continue;
    }
    const auto report =
        verify_swap_optimality(scenario.schedule, *plan, scenario.instance, objective);
    if (!report.pass) {
      std::ostringstream reason;
      reason << "swap optimality violated: f(sigma)=" << report.f_sigma;
      if (report.f_prime) reason << " f(sigma')=" << *report.f_prime;
      if (report.f_second) reason << " f(sigma'')=" << *report.f_second;
      fail(objective, reason.str(), scenario.instance);
    }
  }
  return failures;
}

}  // namespace

VerifyReport run_verification(const VerifyParams& params) {
  if (params.trials < 1) throw ValidationError("verification requires at least 1 trial");
  if (params.n_list.empty()) throw ValidationError("verification requires at least one n");

  std::vector<Objective> objectives = params.objectives;
  if (objectives.empty())
    objectives = {Objective::Wct, Objective::Lmax, Objective::Wtardy};

  const int workers = std::max(1, params.threads > 0 ? params.threads : worker_count());
  std::vector<std::vector<VerifyFailure>> per_trial(static_cast<std::size_t>(params.trials));

  if (workers == 1) {
    for (int trial = 0; trial < params.trials; ++trial)
      per_trial[static_cast<std::size_t>(trial)] = run_trial(params, objectives, trial);
  } else {
    std::atomic<int> cursor{0};
    std::vector<std::future<void>> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int worker = 0; worker < workers; ++worker) {
      pool.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          const int trial = cursor.fetch_add(1);
          if (trial >= params.trials) return;
          per_trial[static_cast<std::size_t>(trial)] = run_trial(params, objectives, trial);
        }
      }));
    }
    for (auto& task : pool) task.get();
  }

  VerifyReport report;
  report.total = params.trials;
  for (int trial = 0; trial < params.trials; ++trial) {
    const auto& failures = per_trial[static_cast<std::size_t>(trial)];
    if (failures.empty()) ++report.passed;
    report.failures.insert(report.failures.end(), failures.begin(), failures.end());
  }
  return report;
}

}  // namespace prunesched

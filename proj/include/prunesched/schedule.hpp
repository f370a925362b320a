#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prunesched/instance.hpp"
#include "prunesched/ordering.hpp"

namespace prunesched {

// Machine slot for a job that is not scheduled (Wtardy discard).
inline constexpr int kDiscarded = -1;

// A proper schedule: each priority position is mapped to a machine (or
// discarded), and every machine processes its jobs in ascending priority
// position. Fully determined by the assignment.
struct ProperSchedule {
  PriorityOrder order;
  std::vector<int> assign;  // per position: machine 0..m-1, or kDiscarded

  int position_count() const { return static_cast<int>(assign.size()); }
};

// Explicit per-machine sequences; may violate the priority ordering. Used
// for the intermediate schedule produced by a swap. Positions absent from
// every sequence are discarded.
struct OrderedSchedule {
  PriorityOrder order;
  std::vector<std::vector<int>> seq;  // per machine: positions in processing order
  int positions = 0;
};

struct CompletionProfile {
  static constexpr std::int64_t kNone = -1;  // discarded position
  std::vector<std::int64_t> completion;      // indexed by priority position

  bool scheduled(int pos) const { return completion[static_cast<std::size_t>(pos)] != kNone; }
};

CompletionProfile completion_times(const ProperSchedule& schedule, const Instance& instance);
// Throws ValidationError if a position appears twice or is out of range.
CompletionProfile completion_times(const OrderedSchedule& schedule, const Instance& instance);

// Wct: sum of w_j * C_j (all jobs must be scheduled).
// Lmax: max_j (C_j - d_j); may be negative (all jobs must be scheduled).
// Wtardy: sum of w_j over discarded jobs; every scheduled job must meet its
// due date, otherwise a ValidationError names the offending job.
Value evaluate(const ProperSchedule& schedule, const Instance& instance, Objective objective);
Value evaluate(const OrderedSchedule& schedule, const Instance& instance, Objective objective);
Value evaluate(const CompletionProfile& profile, const PriorityOrder& order,
               const Instance& instance, Objective objective);

// Same evaluations, but infeasible/discard violations yield nullopt.
std::optional<Value> evaluate_if_feasible(const ProperSchedule& schedule,
                                          const Instance& instance, Objective objective);
std::optional<Value> evaluate_if_feasible(const OrderedSchedule& schedule,
                                          const Instance& instance, Objective objective);

// Per-step machine loads P(J_{i,j}) for j = 0..n, and the largest pairwise
// load gap over all steps. Discarded positions contribute no load.
struct BalanceProfile {
  int machines = 0;
  int steps = 0;
  std::vector<std::int64_t> loads;  // (steps+1) x machines, row-major
  std::int64_t max_abs_delta = 0;

  std::int64_t load(int step, int machine) const {
    return loads[static_cast<std::size_t>(step) * static_cast<std::size_t>(machines) +
                 static_cast<std::size_t>(machine)];
  }
  // Delta_{h,i,j} = P(J_{h,j}) - P(J_{i,j})
  std::int64_t delta(int h, int i, int step) const { return load(step, h) - load(step, i); }
  std::int64_t max_delta_at(int step) const;
};

BalanceProfile balance_profile(const ProperSchedule& schedule, const Instance& instance);

// Repeatedly moves the last job of a maximum-load machine to a minimum-load
// machine until the final loads pairwise differ by at most p_max. Keeps the
// schedule proper and never increases any regular objective. Requires a
// discard-free schedule.
ProperSchedule levelize(const ProperSchedule& schedule, const Instance& instance,
                        Objective objective);

struct LevelizeTrace {
  ProperSchedule schedule;
  int moves = 0;
};
LevelizeTrace levelize_trace(const ProperSchedule& schedule, const Instance& instance,
                             Objective objective);

// CLI --emit-schedule format: "machine <i>: <job indices in processing
// order>" per machine, plus a final "discarded: <indices>" line for Wtardy.
std::string format_schedule(const ProperSchedule& schedule, const Instance& instance,
                            bool include_discarded_line);

}  // namespace prunesched

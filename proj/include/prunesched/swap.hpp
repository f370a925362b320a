#pragma once

#include <optional>
#include <vector>

#include "prunesched/schedule.hpp"

namespace prunesched {

// One admissible exchange between a donor machine (holding the step-j job
// with large prefix load) and a receiver machine with at least 2*p_max
// future jobs, legal when the prefix load gap reaches 4*p_max^2. The job
// lists are priority positions in schedule order; jh/ji each hold exactly
// 2*p_max positions, split into an equal-processing-time part (prime) and
// the remainder (second).
struct SwapPlan {
  int step = 0;      // j*, 1-based priority step
  int donor = 0;     // machine h, 0-based
  int receiver = 0;  // machine i, 0-based
  std::int64_t t_donor = 0;     // t_h = P(J_{h,j*})
  std::int64_t t_receiver = 0;  // t_i = P(J_{i,j*})
  std::vector<int> jh, ji;
  std::vector<int> jh_prime, jh_second;
  std::vector<int> ji_prime, ji_second;

  friend bool operator==(const SwapPlan&, const SwapPlan&) = default;
};

// Returns a plan iff some receiver i satisfies all three admissibility
// conditions at step j; among qualifying receivers the one maximizing
// Delta_{h,i,j} wins, ties by smallest machine index. Discarded positions
// carry no load and never appear in the job lists.
std::optional<SwapPlan> find_admissible_swap(const ProperSchedule& schedule, int step,
                                             const Instance& instance);

struct SwapOutcome {
  OrderedSchedule sigma_prime;   // the intermediate schedule; may be improper
  ProperSchedule sigma_second;   // per-machine priority re-sort of sigma_prime
};

// Executes the plan: on the donor machine jh becomes jh_second then
// ji_prime, on the receiver ji becomes jh_prime then ji_second (all in
// schedule order). Throws ValidationError if the plan is stale.
SwapOutcome apply_swap(const ProperSchedule& schedule, const SwapPlan& plan,
                       const Instance& instance);

struct SwapOptimalityReport {
  Value f_sigma = 0;
  std::optional<Value> f_prime;
  std::optional<Value> f_second;
  bool discards_unchanged = true;
  bool pass = false;
};

// Checks f(sigma'') <= f(sigma') <= f(sigma) for the given objective, and
// for Wtardy that the discarded set is unchanged. Requires a feasible input
// schedule (Wtardy: every scheduled job on time).
SwapOptimalityReport verify_swap_optimality(const ProperSchedule& schedule, const SwapPlan& plan,
                                            const Instance& instance, Objective objective);

}  // namespace prunesched

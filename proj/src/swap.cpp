#include "prunesched/swap.hpp"

#include <algorithm>

#include "prunesched/combinatorics.hpp"

namespace prunesched {

namespace {

std::int64_t job_p(const ProperSchedule& schedule, const Instance& instance, int pos) {
  return instance.job(schedule.order.perm[static_cast<std::size_t>(pos)]).p;
}

}  // namespace

std::optional<SwapPlan> find_admissible_swap(const ProperSchedule& schedule, int step,
                                             const Instance& instance) {
  const int n = schedule.position_count();
  if (n != instance.job_count() || schedule.order.position_count() != n)
    throw ValidationError("schedule does not match the instance");
  if (step < 1 || step > n) throw ValidationError("swap step out of range");

  const int pos = step - 1;
  const int donor = schedule.assign[static_cast<std::size_t>(pos)];
  if (donor == kDiscarded) return std::nullopt;

  const int m = instance.machines();
  const std::int64_t pmax = instance.p_max();
  const std::int64_t need = 2 * pmax;
  const __int128 threshold = __int128(4) * pmax * pmax;

  std::vector<std::int64_t> prefix_load(static_cast<std::size_t>(m), 0);
  std::vector<std::int64_t> future_count(static_cast<std::size_t>(m), 0);
  for (int q = 0; q < n; ++q) {
    const int machine = schedule.assign[static_cast<std::size_t>(q)];
    if (machine == kDiscarded) continue;
    if (q <= pos)
      prefix_load[static_cast<std::size_t>(machine)] += job_p(schedule, instance, q);
    else
      future_count[static_cast<std::size_t>(machine)] += 1;
  }

  int receiver = -1;
  for (int i = 0; i < m; ++i) {
    if (i == donor) continue;
    if (future_count[static_cast<std::size_t>(i)] < need) continue;
    const std::int64_t gap =
        prefix_load[static_cast<std::size_t>(donor)] - prefix_load[static_cast<std::size_t>(i)];
    if (__int128(gap) < threshold) continue;
    if (receiver < 0 ||
        prefix_load[static_cast<std::size_t>(i)] < prefix_load[static_cast<std::size_t>(receiver)])
      receiver = i;
  }
  if (receiver < 0) return std::nullopt;

  SwapPlan plan;
  plan.step = step;
  plan.donor = donor;
  plan.receiver = receiver;
  plan.t_donor = prefix_load[static_cast<std::size_t>(donor)];
  plan.t_receiver = prefix_load[static_cast<std::size_t>(receiver)];

  // J_H: the last 2*p_max prefix jobs on the donor. The load gap forces at
  // least 4*p_max prefix jobs there, so the slice is always full.
  for (int q = pos; q >= 0 && static_cast<std::int64_t>(plan.jh.size()) < need; --q) {
    if (schedule.assign[static_cast<std::size_t>(q)] == donor) plan.jh.push_back(q);
  }
  if (static_cast<std::int64_t>(plan.jh.size()) < need)
    throw InternalError("admissible swap with undersized J_H");
  std::reverse(plan.jh.begin(), plan.jh.end());

  // J_I: the first 2*p_max future jobs on the receiver.
  for (int q = pos + 1; q < n && static_cast<std::int64_t>(plan.ji.size()) < need; ++q) {
    if (schedule.assign[static_cast<std::size_t>(q)] == receiver) plan.ji.push_back(q);
  }

  std::vector<std::int64_t> times_h, times_i;
  times_h.reserve(plan.jh.size());
  times_i.reserve(plan.ji.size());
  for (const int q : plan.jh) times_h.push_back(job_p(schedule, instance, q));
  for (const int q : plan.ji) times_i.push_back(job_p(schedule, instance, q));
  const EqualSumWitness witness = equal_sum_submultisets(times_h, times_i, pmax);

  std::vector<bool> in_prime(plan.jh.size(), false);
  for (const int k : witness.pick_a) in_prime[static_cast<std::size_t>(k)] = true;
  for (std::size_t k = 0; k < plan.jh.size(); ++k)
    (in_prime[k] ? plan.jh_prime : plan.jh_second).push_back(plan.jh[k]);
  std::fill(in_prime.begin(), in_prime.end(), false);
  for (const int k : witness.pick_b) in_prime[static_cast<std::size_t>(k)] = true;
  for (std::size_t k = 0; k < plan.ji.size(); ++k)
    (in_prime[k] ? plan.ji_prime : plan.ji_second).push_back(plan.ji[k]);
  return plan;
}

SwapOutcome apply_swap(const ProperSchedule& schedule, const SwapPlan& plan,
                       const Instance& instance) {
  const auto fresh = find_admissible_swap(schedule, plan.step, instance);
  if (!fresh || !(*fresh == plan))
    throw ValidationError("swap plan is stale for this schedule");

  const int n = schedule.position_count();
  const int m = instance.machines();
  SwapOutcome outcome;
  outcome.sigma_prime.order = schedule.order;
  outcome.sigma_prime.positions = n;
  outcome.sigma_prime.seq.resize(static_cast<std::size_t>(m));
  for (int q = 0; q < n; ++q) {
    const int machine = schedule.assign[static_cast<std::size_t>(q)];
    if (machine != kDiscarded)
      outcome.sigma_prime.seq[static_cast<std::size_t>(machine)].push_back(q);
  }

  // The removed segment and its replacement agree on total processing time
  // but not on length, so the sequence is rebuilt around the cut.
  const auto splice = [](std::vector<int>& seq, const std::vector<int>& segment,
                         const std::vector<int>& first, const std::vector<int>& second) {
    const auto begin = std::find(seq.begin(), seq.end(), segment.front());
    const auto end = begin + static_cast<std::ptrdiff_t>(segment.size());
    if (begin == seq.end() || !std::equal(segment.begin(), segment.end(), begin))
      throw InternalError("swap segment is not contiguous in the machine sequence");
    auto cut = seq.erase(begin, end);
    cut = seq.insert(cut, first.begin(), first.end()) + static_cast<std::ptrdiff_t>(first.size());
    seq.insert(cut, second.begin(), second.end());
  };
  splice(outcome.sigma_prime.seq[static_cast<std::size_t>(plan.donor)], plan.jh, plan.jh_second,
         plan.ji_prime);
  splice(outcome.sigma_prime.seq[static_cast<std::size_t>(plan.receiver)], plan.ji, plan.jh_prime,
         plan.ji_second);

  outcome.sigma_second.order = schedule.order;
  outcome.sigma_second.assign = schedule.assign;
  for (const int q : plan.jh_prime)
    outcome.sigma_second.assign[static_cast<std::size_t>(q)] = plan.receiver;
  for (const int q : plan.ji_prime)
    outcome.sigma_second.assign[static_cast<std::size_t>(q)] = plan.donor;
  return outcome;
}

SwapOptimalityReport verify_swap_optimality(const ProperSchedule& schedule, const SwapPlan& plan,
                                            const Instance& instance, Objective objective) {
  SwapOptimalityReport report;
  report.f_sigma = evaluate(schedule, instance, objective);

  const SwapOutcome outcome = apply_swap(schedule, plan, instance);
  report.f_prime = evaluate_if_feasible(outcome.sigma_prime, instance, objective);
  report.f_second = evaluate_if_feasible(outcome.sigma_second, instance, objective);
  for (int q = 0; q < schedule.position_count(); ++q) {
    const bool was = schedule.assign[static_cast<std::size_t>(q)] == kDiscarded;
    const bool now = outcome.sigma_second.assign[static_cast<std::size_t>(q)] == kDiscarded;
    if (was != now) report.discards_unchanged = false;
  }
  report.pass = report.f_prime && report.f_second && *report.f_second <= *report.f_prime &&
                *report.f_prime <= report.f_sigma &&
                (objective != Objective::Wtardy || report.discards_unchanged);
  return report;
}

}  // namespace prunesched

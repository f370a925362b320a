#include "prunesched/schedule.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace prunesched {

namespace {

void check_shape(const PriorityOrder& order, int positions, const Instance& instance) {
  if (positions != instance.job_count() || order.position_count() != positions)
    throw ValidationError("schedule does not match the instance");
}

const Job& job_at(const PriorityOrder& order, const Instance& instance, int pos) {
  return instance.job(order.perm[static_cast<std::size_t>(pos)]);
}

struct EvalOutcome {
  Value value = 0;
  int discarded_pos = -1;  // first discarded position when the objective forbids it
  int late_pos = -1;       // first scheduled-but-late position (Wtardy)
};

EvalOutcome evaluate_core(const CompletionProfile& profile, const PriorityOrder& order,
                          const Instance& instance, Objective objective) {
  EvalOutcome out;
  const int n = order.position_count();
  switch (objective) {
    case Objective::Wct: {
      Value sum = 0;
      for (int pos = 0; pos < n; ++pos) {
        if (!profile.scheduled(pos)) {
          out.discarded_pos = pos;
          return out;
        }
        sum += job_at(order, instance, pos).w * profile.completion[static_cast<std::size_t>(pos)];
      }
      out.value = sum;
      return out;
    }
    case Objective::Lmax: {
      Value worst = std::numeric_limits<Value>::min();
      for (int pos = 0; pos < n; ++pos) {
        if (!profile.scheduled(pos)) {
          out.discarded_pos = pos;
          return out;
        }
        worst = std::max(worst, profile.completion[static_cast<std::size_t>(pos)] -
                                    job_at(order, instance, pos).d);
      }
      out.value = worst;
      return out;
    }
    case Objective::Wtardy: {
      Value penalty = 0;
      for (int pos = 0; pos < n; ++pos) {
        const Job& job = job_at(order, instance, pos);
        if (!profile.scheduled(pos)) {
          penalty += job.w;
        } else if (profile.completion[static_cast<std::size_t>(pos)] > job.d) {
          out.late_pos = pos;
          return out;
        }
      }
      out.value = penalty;
      return out;
    }
  }
  throw InternalError("unknown objective");
}

Value finish_eval(const EvalOutcome& outcome, const PriorityOrder& order,
                  const Instance& instance, Objective objective) {
  if (outcome.discarded_pos >= 0) {
    throw ValidationError(std::string(objective_name(objective)) +
                          " requires every job scheduled; job " +
                          std::to_string(job_at(order, instance, outcome.discarded_pos).index) +
                          " is discarded");
  }
  if (outcome.late_pos >= 0) {
    throw ValidationError("scheduled job " +
                          std::to_string(job_at(order, instance, outcome.late_pos).index) +
                          " completes after its due date");
  }
  return outcome.value;
}

}  // namespace

CompletionProfile completion_times(const ProperSchedule& schedule, const Instance& instance) {
  check_shape(schedule.order, schedule.position_count(), instance);
  CompletionProfile profile;
  profile.completion.assign(schedule.assign.size(), CompletionProfile::kNone);
  std::vector<std::int64_t> load(static_cast<std::size_t>(instance.machines()), 0);
  for (int pos = 0; pos < schedule.position_count(); ++pos) {
    const int machine = schedule.assign[static_cast<std::size_t>(pos)];
    if (machine == kDiscarded) continue;
    if (machine < 0 || machine >= instance.machines())
      throw ValidationError("machine index out of range");
    load[static_cast<std::size_t>(machine)] += job_at(schedule.order, instance, pos).p;
    profile.completion[static_cast<std::size_t>(pos)] = load[static_cast<std::size_t>(machine)];
  }
  return profile;
}

CompletionProfile completion_times(const OrderedSchedule& schedule, const Instance& instance) {
  check_shape(schedule.order, schedule.positions, instance);
  if (static_cast<int>(schedule.seq.size()) != instance.machines())
    throw ValidationError("schedule does not match the instance");
  CompletionProfile profile;
  profile.completion.assign(static_cast<std::size_t>(schedule.positions),
                            CompletionProfile::kNone);
  std::vector<bool> seen(static_cast<std::size_t>(schedule.positions), false);
  for (const auto& machine_seq : schedule.seq) {
    std::int64_t load = 0;
    for (const int pos : machine_seq) {
      if (pos < 0 || pos >= schedule.positions)
        throw ValidationError("position out of range in ordered schedule");
      if (seen[static_cast<std::size_t>(pos)])
        throw ValidationError("job assigned twice in ordered schedule");
      seen[static_cast<std::size_t>(pos)] = true;
      load += job_at(schedule.order, instance, pos).p;
      profile.completion[static_cast<std::size_t>(pos)] = load;
    }
  }
  return profile;
}

Value evaluate(const CompletionProfile& profile, const PriorityOrder& order,
               const Instance& instance, Objective objective) {
  return finish_eval(evaluate_core(profile, order, instance, objective), order, instance,
                     objective);
}

Value evaluate(const ProperSchedule& schedule, const Instance& instance, Objective objective) {
  return evaluate(completion_times(schedule, instance), schedule.order, instance, objective);
}

Value evaluate(const OrderedSchedule& schedule, const Instance& instance, Objective objective) {
  return evaluate(completion_times(schedule, instance), schedule.order, instance, objective);
}

std::optional<Value> evaluate_if_feasible(const ProperSchedule& schedule,
                                          const Instance& instance, Objective objective) {
  const auto outcome =
      evaluate_core(completion_times(schedule, instance), schedule.order, instance, objective);
  if (outcome.discarded_pos >= 0 || outcome.late_pos >= 0) return std::nullopt;
  return outcome.value;
}

std::optional<Value> evaluate_if_feasible(const OrderedSchedule& schedule,
                                          const Instance& instance, Objective objective) {
  const auto outcome =
      evaluate_core(completion_times(schedule, instance), schedule.order, instance, objective);
  if (outcome.discarded_pos >= 0 || outcome.late_pos >= 0) return std::nullopt;
  return outcome.value;
}

std::int64_t BalanceProfile::max_delta_at(int step) const {
  std::int64_t lo = load(step, 0);
  std::int64_t hi = lo;
  for (int machine = 1; machine < machines; ++machine) {
    lo = std::min(lo, load(step, machine));
    hi = std::max(hi, load(step, machine));
  }
  return hi - lo;
}

BalanceProfile balance_profile(const ProperSchedule& schedule, const Instance& instance) {
  check_shape(schedule.order, schedule.position_count(), instance);
  BalanceProfile profile;
  profile.machines = instance.machines();
  profile.steps = schedule.position_count();
  profile.loads.assign(
      static_cast<std::size_t>(profile.steps + 1) * static_cast<std::size_t>(profile.machines),
      0);
  for (int pos = 0; pos < profile.steps; ++pos) {
    const auto row = static_cast<std::size_t>(pos + 1) * static_cast<std::size_t>(profile.machines);
    const auto prev = row - static_cast<std::size_t>(profile.machines);
    std::copy_n(profile.loads.begin() + static_cast<std::ptrdiff_t>(prev), profile.machines,
                profile.loads.begin() + static_cast<std::ptrdiff_t>(row));
    const int machine = schedule.assign[static_cast<std::size_t>(pos)];
    if (machine != kDiscarded)
      profile.loads[row + static_cast<std::size_t>(machine)] +=
          job_at(schedule.order, instance, pos).p;
    profile.max_abs_delta = std::max(profile.max_abs_delta, profile.max_delta_at(pos + 1));
  }
  return profile;
}

LevelizeTrace levelize_trace(const ProperSchedule& schedule, const Instance& instance,
                             [[maybe_unused]] Objective objective) {
  check_shape(schedule.order, schedule.position_count(), instance);
  const int n = schedule.position_count();
  const int m = instance.machines();
  LevelizeTrace trace{schedule, 0};
  std::vector<std::int64_t> load(static_cast<std::size_t>(m), 0);
  for (int pos = 0; pos < n; ++pos) {
    const int machine = trace.schedule.assign[static_cast<std::size_t>(pos)];
    if (machine == kDiscarded) throw ValidationError("levelize requires a discard-free schedule");
    load[static_cast<std::size_t>(machine)] += job_at(schedule.order, instance, pos).p;
  }

  for (;;) {
    int max_machine = 0;
    int min_machine = 0;
    for (int machine = 1; machine < m; ++machine) {
      if (load[static_cast<std::size_t>(machine)] > load[static_cast<std::size_t>(max_machine)])
        max_machine = machine;
      if (load[static_cast<std::size_t>(machine)] < load[static_cast<std::size_t>(min_machine)])
        min_machine = machine;
    }
    if (load[static_cast<std::size_t>(max_machine)] - load[static_cast<std::size_t>(min_machine)] <=
        instance.p_max())
      break;

    int last_pos = -1;
    for (int pos = n - 1; pos >= 0; --pos) {
      if (trace.schedule.assign[static_cast<std::size_t>(pos)] == max_machine) {
        last_pos = pos;
        break;
      }
    }
    if (last_pos < 0) throw InternalError("max-load machine has no jobs");
    const std::int64_t p = job_at(schedule.order, instance, last_pos).p;
    trace.schedule.assign[static_cast<std::size_t>(last_pos)] = min_machine;
    load[static_cast<std::size_t>(max_machine)] -= p;
    load[static_cast<std::size_t>(min_machine)] += p;
    // A receiving machine can never become a donor again, so every job moves
    // at most once.
    if (++trace.moves > n) throw InternalError("levelize exceeded n moves");
  }
  return trace;
}

ProperSchedule levelize(const ProperSchedule& schedule, const Instance& instance,
                        Objective objective) {
  return levelize_trace(schedule, instance, objective).schedule;
}

std::string format_schedule(const ProperSchedule& schedule, const Instance& instance,
                            bool include_discarded_line) {
  std::ostringstream out;
  for (int machine = 0; machine < instance.machines(); ++machine) {
    out << "machine " << machine + 1 << ':';
    for (int pos = 0; pos < schedule.position_count(); ++pos) {
      if (schedule.assign[static_cast<std::size_t>(pos)] == machine)
        out << ' ' << job_at(schedule.order, instance, pos).index;
    }
    out << '\n';
  }
  if (include_discarded_line) {
    out << "discarded:";
    for (int pos = 0; pos < schedule.position_count(); ++pos) {
      if (schedule.assign[static_cast<std::size_t>(pos)] == kDiscarded)
        out << ' ' << job_at(schedule.order, instance, pos).index;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace prunesched

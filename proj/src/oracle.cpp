#include "prunesched/oracle.hpp"

#include <algorithm>
#include <limits>

#include "solver_internal.hpp"

namespace prunesched {

namespace {

void check_cap(const Instance& instance, Objective objective, const OracleOptions& options) {
  const int radix = instance.machines() + (objective == Objective::Wtardy ? 1 : 0);
  __int128 count = 1;
  for (int j = 0; j < instance.job_count(); ++j) {
    count *= radix;
    if (count > __int128(options.enumeration_cap))
      throw CapExceededError("oracle enumeration would exceed the cap of " +
                             std::to_string(options.enumeration_cap) + " assignments");
  }
}

// Depth-first enumeration over priority positions in mixed-radix order:
// machines ascending, then discard (Wtardy only).
struct Searcher {
  const detail::OrderedJobs& jobs;
  const int n;
  const int m;
  const Objective objective;

  std::vector<std::int64_t> load;
  std::vector<std::int8_t> assign;

  Value best = std::numeric_limits<Value>::max();
  bool any = false;

  // Witness collection (pass 1 only).
  std::size_t witness_cap = 0;
  std::vector<std::vector<std::int8_t>>* witnesses = nullptr;
  bool truncated = false;

  // Balance streaming (pass 2 only): target value and per-step gap bound.
  bool balance_mode = false;
  Value target = 0;
  std::int64_t bound = 0;
  bool found_balanced = false;

  Searcher(const detail::OrderedJobs& ordered, int machines, Objective obj)
      : jobs(ordered),
        n(static_cast<int>(ordered.p.size())),
        m(machines),
        objective(obj),
        load(static_cast<std::size_t>(machines), 0),
        assign(static_cast<std::size_t>(n), -2) {}

  bool balanced_at_step() const {
    std::int64_t lo = load[0];
    std::int64_t hi = load[0];
    for (int i = 1; i < m; ++i) {
      lo = std::min(lo, load[static_cast<std::size_t>(i)]);
      hi = std::max(hi, load[static_cast<std::size_t>(i)]);
    }
    return hi - lo <= bound;
  }

  void leaf(Value value, bool balanced) {
    if (balance_mode) {
      if (value == target && balanced) found_balanced = true;
      return;
    }
    if (!any || value < best) {
      any = true;
      best = value;
      if (witnesses) {
        witnesses->clear();
        truncated = false;
        witnesses->push_back(assign);
      }
    } else if (value == best && witnesses) {
      if (witnesses->size() < witness_cap)
        witnesses->push_back(assign);
      else
        truncated = true;
    }
  }

  // wct_sum / tardy_sum accumulate additively; lmax carries the running max.
  void walk(int pos, Value additive, Value running_max, bool balanced) {
    if (pos == n) {
      leaf(objective == Objective::Lmax ? running_max : additive, balanced);
      return;
    }
    const std::int64_t p = jobs.p[static_cast<std::size_t>(pos)];
    const std::int64_t w = jobs.w[static_cast<std::size_t>(pos)];
    const std::int64_t d = jobs.d[static_cast<std::size_t>(pos)];

    for (int i = 0; i < m; ++i) {
      const std::int64_t completion = load[static_cast<std::size_t>(i)] + p;
      if (objective == Objective::Wtardy && completion > d) continue;  // late: skipped
      load[static_cast<std::size_t>(i)] = completion;
      assign[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(i);
      const bool balanced_here = balanced && balanced_at_step();
      switch (objective) {
        case Objective::Wct:
          walk(pos + 1, additive + w * completion, running_max, balanced_here);
          break;
        case Objective::Lmax:
          walk(pos + 1, additive, std::max(running_max, completion - d), balanced_here);
          break;
        case Objective::Wtardy:
          walk(pos + 1, additive, running_max, balanced_here);
          break;
      }
      load[static_cast<std::size_t>(i)] = completion - p;
    }
    if (objective == Objective::Wtardy) {
      assign[static_cast<std::size_t>(pos)] = -1;
      walk(pos + 1, additive + w, running_max, balanced && balanced_at_step());
    }
    assign[static_cast<std::size_t>(pos)] = -2;
  }
};

}  // namespace

OracleResult brute_force(const Instance& instance, Objective objective,
                         const OracleOptions& options) {
  check_cap(instance, objective, options);
  const auto jobs = detail::order_jobs(instance, objective);

  Searcher searcher(jobs, instance.machines(), objective);
  OracleResult result;
  searcher.witness_cap = options.witness_cap;
  searcher.witnesses = &result.witnesses;
  searcher.walk(0, 0, std::numeric_limits<Value>::min(), true);
  if (!searcher.any) throw InternalError("oracle enumerated no assignment");

  result.value = searcher.best;
  result.witnesses_truncated = searcher.truncated;
  return result;
}

bool balanced_optimum_exists(const Instance& instance, Objective objective, std::int64_t bound,
                             const OracleOptions& options) {
  check_cap(instance, objective, options);
  const auto jobs = detail::order_jobs(instance, objective);

  Searcher pass1(jobs, instance.machines(), objective);
  pass1.walk(0, 0, std::numeric_limits<Value>::min(), true);
  if (!pass1.any) throw InternalError("oracle enumerated no assignment");

  Searcher pass2(jobs, instance.machines(), objective);
  pass2.balance_mode = true;
  pass2.target = pass1.best;
  pass2.bound = bound;
  pass2.walk(0, 0, std::numeric_limits<Value>::min(), true);
  return pass2.found_balanced;
}

bool balanced_optimum_exists(const Instance& instance, Objective objective,
                             const OracleOptions& options) {
  return balanced_optimum_exists(instance, objective,
                                 4 * instance.p_max() * instance.p_max(), options);
}

ProperSchedule witness_schedule(const OracleResult& result, const Instance& instance,
                                Objective objective) {
  if (result.witnesses.empty()) throw ValidationError("oracle result has no witnesses");
  ProperSchedule schedule;
  schedule.order = priority_order(instance, objective);
  const auto& witness = result.witnesses.front();
  schedule.assign.resize(witness.size());
  for (std::size_t pos = 0; pos < witness.size(); ++pos)
    schedule.assign[pos] = witness[pos] < 0 ? kDiscarded : witness[pos];
  return schedule;
}

}  // namespace prunesched

#include "prunesched/solver.hpp"

#include "solver_internal.hpp"

namespace prunesched {

using detail::kNegInf;

namespace {

// State coordinates are machine loads: the first m-1 machines for Wct/Lmax
// (the m-th load is P(J_j) minus their sum), all m machines for Wtardy.
SolveResult solve_classic_impl(const Instance& instance, Objective objective,
                               const SolveOptions& options) {
  const auto jobs = detail::order_jobs(instance, objective);
  const int n = instance.job_count();
  const int m = instance.machines();
  const bool tardy = objective == Objective::Wtardy;
  const int dims = tardy ? m : m - 1;

  const auto geometry = StateGeometry::from_extents(
      std::vector<std::int64_t>(static_cast<std::size_t>(dims), instance.total_p() + 1));
  const auto backend = detail::resolve_backend(geometry, options.backend);

  LayerMap current(geometry.cells(), backend);
  LayerMap next(geometry.cells(), backend);
  current.merge(0, objective == Objective::Lmax ? kNegInf : 0, 0);

  SolveResult result;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint8_t>>> links;
  if (options.reconstruct) links.reserve(static_cast<std::size_t>(n));

  std::vector<std::int64_t> coords(static_cast<std::size_t>(std::max(dims, 1)));
  std::int64_t prefix_p = 0;
  for (int j = 0; j < n; ++j) {
    const std::int64_t p = jobs.p[static_cast<std::size_t>(j)];
    const std::int64_t w = jobs.w[static_cast<std::size_t>(j)];
    const std::int64_t d = jobs.d[static_cast<std::size_t>(j)];
    prefix_p += p;
    const Value bias = (options.bias_last_job && j == n - 1) ? 1 : 0;

    next.reset();
    current.for_each([&](std::uint64_t key, Value value, std::uint8_t) {
      geometry.unpack(key, coords.data());
      if (!tardy) {
        std::int64_t tracked_sum = 0;
        for (int i = 0; i < dims; ++i) {
          const std::int64_t completion = coords[static_cast<std::size_t>(i)] + p;
          tracked_sum += coords[static_cast<std::size_t>(i)];
          const Value v = objective == Objective::Wct
                              ? value + w * completion
                              : std::max(value, completion - d);
          next.merge(key + static_cast<std::uint64_t>(p) * geometry.stride(i), v + bias,
                     static_cast<std::uint8_t>(i));
        }
        const std::int64_t completion = prefix_p - tracked_sum;
        const Value v = objective == Objective::Wct ? value + w * completion
                                                    : std::max(value, completion - d);
        next.merge(key, v + bias, static_cast<std::uint8_t>(m - 1));
      } else {
        for (int i = 0; i < m; ++i) {
          const std::int64_t completion = coords[static_cast<std::size_t>(i)] + p;
          if (completion > d) continue;
          next.merge(key + static_cast<std::uint64_t>(p) * geometry.stride(i), value + bias,
                     static_cast<std::uint8_t>(i));
        }
        next.merge(key, value + w + bias, static_cast<std::uint8_t>(m));
      }
    });
    detail::record_layer(result.stats, next.size());
    if (options.reconstruct) links.push_back(next.sorted_choices());
    std::swap(current, next);
  }

  const auto best = detail::best_final_state(current);
  if (!best.found) throw InternalError("classic DP has no reachable final state");
  result.value = best.value;

  if (options.reconstruct) {
    ProperSchedule schedule;
    schedule.order = jobs.order;
    schedule.assign.assign(static_cast<std::size_t>(n), kDiscarded);
    std::uint64_t key = best.key;
    for (int j = n - 1; j >= 0; --j) {
      const std::uint8_t choice = detail::choice_at(links[static_cast<std::size_t>(j)], key);
      const std::int64_t p = jobs.p[static_cast<std::size_t>(j)];
      if (choice < dims) {
        schedule.assign[static_cast<std::size_t>(j)] = choice;
        key -= static_cast<std::uint64_t>(p) * geometry.stride(choice);
      } else if (!tardy && choice == m - 1) {
        schedule.assign[static_cast<std::size_t>(j)] = m - 1;
      } else if (tardy && choice == m) {
        // discarded; assignment already kDiscarded
      } else {
        throw InternalError("invalid choice in classic reconstruction");
      }
    }
    result.schedule = std::move(schedule);
  }
  return result;
}

}  // namespace

SolveResult solve_classic(const Instance& instance, Objective objective,
                          const SolveOptions& options) {
  return solve_classic_impl(instance, objective, options);
}

}  // namespace prunesched

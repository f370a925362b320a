#include "prunesched/solver.hpp"

#include "solver_internal.hpp"

namespace prunesched {

using detail::kNegInf;

namespace {

using Wide = __int128;

std::int64_t checked_i64(Wide v, const char* what) {
  if (v > Wide(INT64_MAX)) throw ValidationError(what);
  return static_cast<std::int64_t>(v);
}

// Deviation encoding for Wct/Lmax: D_i = m * P(J_{i,j}) - P(J_j) for the
// tracked machines i < m. Scaling by m keeps every state integral without
// assuming processing times are multiples of m; the paper's state P_i is
// D_i / m. Loads follow as P(J_{i,j}) = (P(J_j) + D_i) / m.
SolveResult solve_pruned_balance(const Instance& instance, Objective objective,
                                 const SolveOptions& options) {
  const auto jobs = detail::order_jobs(instance, objective);
  const int n = instance.job_count();
  const int m = instance.machines();
  const int dims = m - 1;
  const std::int64_t deviation_bound = checked_i64(
      Wide(4) * m * instance.p_max() * instance.p_max(), "deviation bound exceeds 64 bits");

  const auto geometry = StateGeometry::from_extents(std::vector<std::int64_t>(
      static_cast<std::size_t>(dims), 2 * deviation_bound + 1));
  const auto backend = detail::resolve_backend(geometry, options.backend);

  // Coordinates store D_i + deviation_bound; the all-zero deviation start is
  // the centre of the box.
  std::vector<std::int64_t> coords(static_cast<std::size_t>(std::max(dims, 1)));
  std::vector<std::int64_t> parent(coords.size());
  std::vector<std::int64_t> packed(coords.size());
  std::fill(coords.begin(), coords.end(), deviation_bound);

  LayerMap current(geometry.cells(), backend);
  LayerMap next(geometry.cells(), backend);
  current.merge(geometry.pack(coords.data()), objective == Objective::Lmax ? kNegInf : 0, 0);

  SolveResult result;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint8_t>>> links;
  if (options.reconstruct) links.reserve(static_cast<std::size_t>(n));

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

      // Assign to tracked machine i: D_i += (m-1)*p, D_k -= p for k != i.
      for (int i = 0; i < dims; ++i) {
        bool pruned = false;
        std::int64_t d_i = 0;
        for (int k = 0; k < dims; ++k) {
          const std::int64_t shifted = coords[static_cast<std::size_t>(k)] +
                                       (k == i ? (m - 1) * p : -p);
          if (shifted < 0 || shifted > 2 * deviation_bound) {
            pruned = true;
            break;
          }
          packed[static_cast<std::size_t>(k)] = shifted;
          if (k == i) d_i = shifted - deviation_bound;
        }
        if (pruned) continue;
        if ((prefix_p + d_i) % m != 0)
          throw InternalError("pruned state violates divisibility");
        const std::int64_t completion = (prefix_p + d_i) / m;
        const Value v = objective == Objective::Wct ? value + w * completion
                                                    : std::max(value, completion - d);
        next.merge(geometry.pack(packed.data()), v + bias, static_cast<std::uint8_t>(i));
      }

      // Assign to machine m: every tracked D_k -= p.
      {
        bool pruned = false;
        std::int64_t tracked_sum = 0;
        for (int k = 0; k < dims; ++k) {
          const std::int64_t shifted = coords[static_cast<std::size_t>(k)] - p;
          if (shifted < 0) {
            pruned = true;
            break;
          }
          packed[static_cast<std::size_t>(k)] = shifted;
          tracked_sum += shifted - deviation_bound;
        }
        if (!pruned) {
          if ((prefix_p - tracked_sum) % m != 0)
            throw InternalError("pruned state violates divisibility");
          const std::int64_t completion = (prefix_p - tracked_sum) / m;
          const Value v = objective == Objective::Wct ? value + w * completion
                                                      : std::max(value, completion - d);
          next.merge(geometry.pack(packed.data()), v + bias, static_cast<std::uint8_t>(m - 1));
        }
      }
    });
    detail::record_layer(result.stats, next.size());
    if (options.reconstruct) links.push_back(next.sorted_choices());
    std::swap(current, next);
  }

  const auto best = detail::best_final_state(current);
  if (!best.found) throw InternalError("pruned DP has no reachable final state");
  result.value = best.value;

  if (options.reconstruct) {
    ProperSchedule schedule;
    schedule.order = jobs.order;
    schedule.assign.assign(static_cast<std::size_t>(n), kDiscarded);
    std::uint64_t key = best.key;
    for (int j = n - 1; j >= 0; --j) {
      const std::uint8_t choice = detail::choice_at(links[static_cast<std::size_t>(j)], key);
      const std::int64_t p = jobs.p[static_cast<std::size_t>(j)];
      geometry.unpack(key, coords.data());
      for (int k = 0; k < dims; ++k) {
        parent[static_cast<std::size_t>(k)] =
            coords[static_cast<std::size_t>(k)] + (choice == k ? -(m - 1) * p : p);
        if (parent[static_cast<std::size_t>(k)] < 0 ||
            parent[static_cast<std::size_t>(k)] > 2 * deviation_bound)
          throw InternalError("pruned reconstruction left the deviation box");
      }
      if (choice > m - 1) throw InternalError("invalid choice in pruned reconstruction");
      schedule.assign[static_cast<std::size_t>(j)] = choice;
      key = geometry.pack(parent.data());
    }
    result.schedule = std::move(schedule);
  }
  return result;
}

// Wtardy: tracked coordinates Delta_i = P_i - P_m for i < m (offset by the
// 4*p_max^2 bound) plus the absolute load P_m of machine m.
SolveResult solve_pruned_tardy(const Instance& instance, const SolveOptions& options) {
  const auto jobs = detail::order_jobs(instance, Objective::Wtardy);
  const int n = instance.job_count();
  const int m = instance.machines();
  const int dims = m - 1;
  const std::int64_t delta_bound = checked_i64(
      Wide(4) * instance.p_max() * instance.p_max(), "deviation bound exceeds 64 bits");

  std::vector<std::int64_t> extents(static_cast<std::size_t>(dims), 2 * delta_bound + 1);
  extents.push_back(instance.total_p() + 1);  // P_m
  const auto geometry = StateGeometry::from_extents(std::move(extents));
  const auto backend = detail::resolve_backend(geometry, options.backend);

  std::vector<std::int64_t> coords(static_cast<std::size_t>(dims) + 1);
  std::vector<std::int64_t> parent(coords.size());
  std::vector<std::int64_t> packed(coords.size());
  std::fill(coords.begin(), coords.end() - 1, delta_bound);
  coords.back() = 0;

  LayerMap current(geometry.cells(), backend);
  LayerMap next(geometry.cells(), backend);
  current.merge(geometry.pack(coords.data()), 0, 0);

  SolveResult result;
  std::vector<std::vector<std::pair<std::uint64_t, std::uint8_t>>> links;
  if (options.reconstruct) links.reserve(static_cast<std::size_t>(n));

  for (int j = 0; j < n; ++j) {
    const std::int64_t p = jobs.p[static_cast<std::size_t>(j)];
    const std::int64_t w = jobs.w[static_cast<std::size_t>(j)];
    const std::int64_t d = jobs.d[static_cast<std::size_t>(j)];
    const Value bias = (options.bias_last_job && j == n - 1) ? 1 : 0;

    next.reset();
    current.for_each([&](std::uint64_t key, Value value, std::uint8_t) {
      geometry.unpack(key, coords.data());
      const std::int64_t load_m = coords[static_cast<std::size_t>(dims)];

      // Schedule on tracked machine i: needs P_m + Delta_i + p <= d_j.
      for (int i = 0; i < dims; ++i) {
        const std::int64_t delta = coords[static_cast<std::size_t>(i)] - delta_bound;
        const std::int64_t completion = load_m + delta + p;
        if (completion > d) continue;
        const std::int64_t shifted = coords[static_cast<std::size_t>(i)] + p;
        if (shifted > 2 * delta_bound) continue;  // pruned
        next.merge(key + static_cast<std::uint64_t>(p) * geometry.stride(i), value + bias,
                   static_cast<std::uint8_t>(i));
      }

      // Schedule on machine m: needs P_m + p <= d_j; all deltas shrink.
      if (load_m + p <= d) {
        bool pruned = false;
        for (int k = 0; k < dims; ++k) {
          const std::int64_t shifted = coords[static_cast<std::size_t>(k)] - p;
          if (shifted < 0) {
            pruned = true;
            break;
          }
          packed[static_cast<std::size_t>(k)] = shifted;
        }
        if (!pruned) {
          packed[static_cast<std::size_t>(dims)] = load_m + p;
          next.merge(geometry.pack(packed.data()), value + bias,
                     static_cast<std::uint8_t>(m - 1));
        }
      }

      // Discard at cost w_j.
      next.merge(key, value + w + bias, static_cast<std::uint8_t>(m));
    });
    detail::record_layer(result.stats, next.size());
    if (options.reconstruct) links.push_back(next.sorted_choices());
    std::swap(current, next);
  }

  const auto best = detail::best_final_state(current);
  if (!best.found) throw InternalError("pruned DP has no reachable final state");
  result.value = best.value;

  if (options.reconstruct) {
    ProperSchedule schedule;
    schedule.order = jobs.order;
    schedule.assign.assign(static_cast<std::size_t>(n), kDiscarded);
    std::uint64_t key = best.key;
    for (int j = n - 1; j >= 0; --j) {
      const std::uint8_t choice = detail::choice_at(links[static_cast<std::size_t>(j)], key);
      const std::int64_t p = jobs.p[static_cast<std::size_t>(j)];
      geometry.unpack(key, coords.data());
      std::copy(coords.begin(), coords.end(), parent.begin());
      if (choice < dims) {
        schedule.assign[static_cast<std::size_t>(j)] = choice;
        parent[static_cast<std::size_t>(choice)] -= p;
      } else if (choice == m - 1) {
        schedule.assign[static_cast<std::size_t>(j)] = m - 1;
        for (int k = 0; k < dims; ++k) parent[static_cast<std::size_t>(k)] += p;
        parent[static_cast<std::size_t>(dims)] -= p;
      } else if (choice == m) {
        // discarded
      } else {
        throw InternalError("invalid choice in pruned reconstruction");
      }
      for (int k = 0; k <= dims; ++k) {
        if (parent[static_cast<std::size_t>(k)] < 0 ||
            parent[static_cast<std::size_t>(k)] >= geometry.extent(k))
          throw InternalError("pruned reconstruction left the state box");
      }
      key = geometry.pack(parent.data());
    }
    result.schedule = std::move(schedule);
  }
  return result;
}

}  // namespace

SolveResult solve_pruned(const Instance& instance, Objective objective,
                         const SolveOptions& options) {
  if (objective == Objective::Wtardy) return solve_pruned_tardy(instance, options);
  return solve_pruned_balance(instance, objective, options);
}

std::int64_t state_bound(const Instance& instance, Objective objective) {
  const Wide pmax2 = Wide(instance.p_max()) * instance.p_max();
  Wide per_dim;
  Wide bound = 1;
  if (objective == Objective::Wtardy) {
    per_dim = 8 * pmax2 + 1;
  } else {
    per_dim = 8 * Wide(instance.machines()) * pmax2 + 1;
  }
  for (int i = 0; i < instance.machines() - 1; ++i) {
    bound *= per_dim;
    if (bound > Wide(INT64_MAX)) throw ValidationError("state bound exceeds 64 bits");
  }
  if (objective == Objective::Wtardy) {
    bound *= Wide(instance.total_p()) + 1;
    if (bound > Wide(INT64_MAX)) throw ValidationError("state bound exceeds 64 bits");
  }
  return static_cast<std::int64_t>(bound);
}

}  // namespace prunesched

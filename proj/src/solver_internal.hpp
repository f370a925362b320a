#pragma once

#include <algorithm>
#include <limits>

#include "prunesched/ordering.hpp"
#include "prunesched/solver.hpp"

namespace prunesched::detail {

inline constexpr Value kNegInf = std::numeric_limits<Value>::min();

// Jobs rearranged into priority order; DP layers index positions 0..n-1.
struct OrderedJobs {
  PriorityOrder order;
  std::vector<std::int64_t> p, w, d;
};

inline OrderedJobs order_jobs(const Instance& instance, Objective objective) {
  OrderedJobs jobs;
  jobs.order = priority_order(instance, objective);
  const auto n = jobs.order.perm.size();
  jobs.p.resize(n);
  jobs.w.resize(n);
  jobs.d.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const Job& job = instance.job(jobs.order.perm[pos]);
    jobs.p[pos] = job.p;
    jobs.w[pos] = job.w;
    jobs.d[pos] = job.d;
  }
  return jobs;
}

inline LayerMap::Backend resolve_backend(const StateGeometry& geometry,
                                         SolveOptions::Backend requested) {
  switch (requested) {
    case SolveOptions::Backend::Dense: return LayerMap::Backend::Dense;
    case SolveOptions::Backend::Hash: return LayerMap::Backend::Hash;
    case SolveOptions::Backend::Auto: break;
  }
  return LayerMap::pick_backend(geometry.cells());
}

inline void record_layer(SolveStats& stats, std::size_t states) {
  const auto count = static_cast<std::int64_t>(states);
  stats.layer_states.push_back(count);
  stats.peak_states = std::max(stats.peak_states, count);
  stats.total_states += count;
}

// Deterministic optimum in the final layer: minimum value, then smallest key.
struct FinalState {
  bool found = false;
  std::uint64_t key = 0;
  Value value = 0;
};

inline FinalState best_final_state(const LayerMap& layer) {
  FinalState best;
  layer.for_each([&best](std::uint64_t key, Value value, std::uint8_t) {
    if (!best.found || value < best.value || (value == best.value && key < best.key)) {
      best = {true, key, value};
    }
  });
  return best;
}

inline std::uint8_t choice_at(const std::vector<std::pair<std::uint64_t, std::uint8_t>>& layer,
                              std::uint64_t key) {
  const auto it = std::lower_bound(layer.begin(), layer.end(),
                                   std::make_pair(key, std::uint8_t{0}));
  if (it == layer.end() || it->first != key)
    throw InternalError("reconstruction key missing from layer snapshot");
  return it->second;
}

}  // namespace prunesched::detail

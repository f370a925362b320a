#include "prunesched/bench.hpp"

#include <algorithm>
#include <chrono>

#include "prunesched/oracle.hpp"
#include "prunesched/solver.hpp"

namespace prunesched {

namespace {

std::int64_t lower_median(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  return values[(values.size() - 1) / 2];
}

}  // namespace

const char* algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::Oracle: return "oracle";
    case Algorithm::Classic: return "classic";
    case Algorithm::Pruned: return "pruned";
  }
  return "?";
}

bool algorithm_from_name(const std::string& name, Algorithm& out) {
  if (name == "oracle") out = Algorithm::Oracle;
  else if (name == "classic") out = Algorithm::Classic;
  else if (name == "pruned") out = Algorithm::Pruned;
  else return false;
  return true;
}

TimingSample time_solver(const Instance& instance, Objective objective, Algorithm algorithm,
                         int repetitions, std::string config) {
  if (repetitions < 3) throw ValidationError("timing requires at least 3 repetitions");

  const auto run = [&]() {
    std::pair<Value, std::int64_t> out;  // value, peak states
    switch (algorithm) {
      case Algorithm::Oracle: {
        const auto result = brute_force(instance, objective);
        out = {result.value, 0};
        break;
      }
      case Algorithm::Classic: {
        const auto result = solve_classic(instance, objective, SolveOptions{.reconstruct = false});
        out = {result.value, result.stats.peak_states};
        break;
      }
      case Algorithm::Pruned: {
        const auto result = solve_pruned(instance, objective, SolveOptions{.reconstruct = false});
        out = {result.value, result.stats.peak_states};
        break;
      }
    }
    return out;
  };

  TimingSample sample;
  sample.config = std::move(config);
  sample.repetitions = repetitions;

  const auto warmup = run();
  sample.value = warmup.first;
  sample.peak_states = warmup.second;

  std::vector<std::int64_t> wall_us;
  wall_us.reserve(static_cast<std::size_t>(repetitions));
  for (int rep = 0; rep < repetitions; ++rep) {
    const auto start = std::chrono::steady_clock::now();
    const auto outcome = run();
    const auto stop = std::chrono::steady_clock::now();
    if (outcome.first != sample.value)
      throw InternalError("solver value changed between timed runs");
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    wall_us.push_back(us);
    sample.wall_ms.push_back(us / 1000);
  }
  sample.median_ms = lower_median(sample.wall_ms);
  sample.min_ms = *std::min_element(sample.wall_ms.begin(), sample.wall_ms.end());
  sample.median_us = lower_median(wall_us);
  return sample;
}

std::vector<double> scaling_ratio(const std::vector<TimingSample>& samples) {
  if (samples.size() < 2) throw ValidationError("scaling ratios need at least 2 samples");
  std::vector<double> ratios;
  ratios.reserve(samples.size() - 1);
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    const double denom = static_cast<double>(std::max<std::int64_t>(samples[i].median_us, 1));
    ratios.push_back(static_cast<double>(samples[i + 1].median_us) / denom);
  }
  return ratios;
}

}  // namespace prunesched

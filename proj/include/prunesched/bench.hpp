#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prunesched/instance.hpp"

namespace prunesched {

enum class Algorithm { Oracle, Classic, Pruned };

const char* algorithm_name(Algorithm algorithm);
bool algorithm_from_name(const std::string& name, Algorithm& out);

struct TimingSample {
  std::string config;
  int repetitions = 0;
  std::vector<std::int64_t> wall_ms;  // one entry per timed run, warm-up excluded
  std::int64_t median_ms = 0;
  std::int64_t min_ms = 0;
  // Microsecond-resolution median backing scaling_ratio; millisecond
  // medians of fast solves are too coarse for ratio checks.
  std::int64_t median_us = 0;
  Value value = 0;
  std::int64_t peak_states = 0;
};

// One warm-up run (discarded) followed by `repetitions >= 3` timed runs of
// the solver on the same immutable instance. The solved value must be
// identical across runs.
TimingSample time_solver(const Instance& instance, Objective objective, Algorithm algorithm,
                         int repetitions, std::string config = {});

// Consecutive median-time ratios for samples ordered by n.
std::vector<double> scaling_ratio(const std::vector<TimingSample>& samples);

}  // namespace prunesched

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prunesched/schedule.hpp"

namespace prunesched {

struct OracleOptions {
  // Maximum number of enumerated assignments: m^n (Wct/Lmax) or (m+1)^n
  // (Wtardy, discard is an extra choice per position).
  std::int64_t enumeration_cap = 10'000'000;
  // At most this many optimal assignments are retained as witnesses; the
  // minimum value itself is always exact.
  std::size_t witness_cap = 100'000;
};

struct OracleResult {
  Value value = 0;
  // Optimal assignments in mixed-radix enumeration order over priority
  // positions (machine 0..m-1 digits, discard last), capped.
  std::vector<std::vector<std::int8_t>> witnesses;
  bool witnesses_truncated = false;
  std::optional<bool> balanced_witness_exists;
};

// Exhaustively enumerates every assignment of priority-ordered jobs to
// machines (plus discard for Wtardy), skipping infeasible Wtardy
// assignments, and returns the exact minimum. No pruning of any kind.
OracleResult brute_force(const Instance& instance, Objective objective,
                         const OracleOptions& options = {});

// True iff some optimal assignment keeps every pairwise machine-load gap
// within `bound` at every prefix step (Wtardy: loads over scheduled jobs).
// Two naive passes: the first fixes the optimum, the second streams the
// balance check over optimal assignments, so the witness cap never affects
// the answer.
bool balanced_optimum_exists(const Instance& instance, Objective objective, std::int64_t bound,
                             const OracleOptions& options = {});
// Same with the structure-theorem bound 4 * p_max^2.
bool balanced_optimum_exists(const Instance& instance, Objective objective,
                             const OracleOptions& options = {});

// First witness as a proper schedule.
ProperSchedule witness_schedule(const OracleResult& result, const Instance& instance,
                                Objective objective);

}  // namespace prunesched

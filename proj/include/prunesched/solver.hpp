#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "prunesched/dp_layer.hpp"
#include "prunesched/schedule.hpp"

namespace prunesched {

struct SolveOptions {
  // Keep per-layer parent links and return a reconstructed schedule.
  bool reconstruct = true;
  // Auto picks direct addressing for small state boxes; tests force Hash.
  enum class Backend { Auto, Dense, Hash } backend = Backend::Auto;
  // Fault injection for `verify --self-test`: every transition of the last
  // job costs one extra unit, so equivalence checks must fail.
  bool bias_last_job = false;
};

struct SolveStats {
  std::vector<std::int64_t> layer_states;  // stored states per step, 1..n
  std::int64_t peak_states = 0;
  std::int64_t total_states = 0;
};

struct SolveResult {
  Value value = 0;
  std::optional<ProperSchedule> schedule;
  SolveStats stats;
};

// Lawler-Moore dynamic program over machine loads: states (P_1..P_{m-1})
// for Wct/Lmax with the m-th load implicit, (P_1..P_m) for Wtardy with a
// discard transition.
SolveResult solve_classic(const Instance& instance, Objective objective,
                          const SolveOptions& options = {});

// The pruned dynamic program. Wct/Lmax track D_i = m*P(J_{i,j}) - P(J_j)
// for i < m, pruned to |D_i| <= 4*m*p_max^2; Wtardy tracks
// Delta_i = P_i - P_m pruned to |Delta_i| <= 4*p_max^2 plus the absolute
// load P_m.
SolveResult solve_pruned(const Instance& instance, Objective objective,
                         const SolveOptions& options = {});

// Ceiling on any pruned layer's stored-state count:
// Wct/Lmax: (8*m*p_max^2 + 1)^(m-1); Wtardy: (8*p_max^2 + 1)^(m-1) * (P+1).
std::int64_t state_bound(const Instance& instance, Objective objective);

}  // namespace prunesched

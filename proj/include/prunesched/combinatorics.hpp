#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prunesched/common.hpp"

namespace prunesched {

// Non-empty submultisets of A and B with equal element sums, found by the
// greedy prefix walk over the first 2U elements of each list: append the next
// A-element while sum(A_i) <= sum(B_i), else the next B-element. The running
// difference stays in (-U, U], so two prefixes collide and their set
// difference is the witness. Among colliding prefix pairs (i, j), the one
// with smallest j, then smallest i, is returned.
struct EqualSumWitness {
  std::vector<int> pick_a;  // 0-based indices into the input list A, ascending
  std::vector<int> pick_b;
  std::int64_t sum = 0;
  // sum(A_i) - sum(B_i) for i = 0..2U; exposed so the pigeonhole range
  // invariant can be asserted externally.
  std::vector<std::int64_t> prefix_diff;
};

// Requires every element of a and b in [1, u] and |a|, |b| >= 2u.
// Deterministic: identical inputs yield identical witnesses.
EqualSumWitness equal_sum_submultisets(std::span<const std::int64_t> a,
                                       std::span<const std::int64_t> b, std::int64_t u);

}  // namespace prunesched

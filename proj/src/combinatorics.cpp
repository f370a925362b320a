#include "prunesched/combinatorics.hpp"

namespace prunesched {

EqualSumWitness equal_sum_submultisets(std::span<const std::int64_t> a,
                                       std::span<const std::int64_t> b, std::int64_t u) {
  if (u < 1) throw ValidationError("equal-sum bound U must be >= 1");
  const auto steps = static_cast<std::size_t>(2 * u);
  if (a.size() < steps || b.size() < steps)
    throw ValidationError("equal-sum inputs must each have at least 2U elements");
  for (const auto v : a)
    if (v < 1 || v > u) throw ValidationError("equal-sum element outside [1, U]");
  for (const auto v : b)
    if (v < 1 || v > u) throw ValidationError("equal-sum element outside [1, U]");

  EqualSumWitness witness;
  witness.prefix_diff.reserve(steps + 1);
  witness.prefix_diff.push_back(0);

  // step_from_a[i] records which list supplied the element at walk step i+1.
  std::vector<bool> step_from_a(steps, false);
  // first occurrence of each difference value; differences lie in (-U, U].
  std::vector<int> first_seen(static_cast<std::size_t>(2 * u + 1), -1);
  first_seen[static_cast<std::size_t>(u)] = 0;

  std::size_t cursor_a = 0;
  std::size_t cursor_b = 0;
  std::int64_t diff = 0;
  int collide_i = -1;
  int collide_j = -1;
  for (std::size_t step = 1; step <= steps; ++step) {
    if (diff <= 0) {
      step_from_a[step - 1] = true;
      diff += a[cursor_a++];
    } else {
      diff -= b[cursor_b++];
    }
    if (diff <= -u || diff > u) throw InternalError("pigeonhole walk left (-U, U]");
    witness.prefix_diff.push_back(diff);
    if (collide_j < 0) {
      auto& seen = first_seen[static_cast<std::size_t>(diff + u)];
      if (seen >= 0) {
        collide_i = seen;
        collide_j = static_cast<int>(step);
      } else {
        seen = static_cast<int>(step);
      }
    }
  }
  if (collide_j < 0) throw InternalError("pigeonhole collision not found");

  // The witness is the set difference of the colliding prefixes: elements
  // consumed strictly after step collide_i, up to step collide_j.
  std::size_t consumed_a = 0;
  std::size_t consumed_b = 0;
  std::int64_t sum_b = 0;
  for (int step = 0; step < collide_j; ++step) {
    const bool from_a = step_from_a[static_cast<std::size_t>(step)];
    if (step >= collide_i) {
      if (from_a) {
        witness.pick_a.push_back(static_cast<int>(consumed_a));
        witness.sum += a[consumed_a];
      } else {
        witness.pick_b.push_back(static_cast<int>(consumed_b));
        sum_b += b[consumed_b];
      }
    }
    consumed_a += from_a ? 1 : 0;
    consumed_b += from_a ? 0 : 1;
  }
  if (witness.pick_a.empty() || witness.pick_b.empty())
    throw InternalError("equal-sum witness has an empty side");
  if (witness.sum != sum_b) throw InternalError("equal-sum witness sums differ");
  return witness;
}

}  // namespace prunesched

#pragma once

#include <vector>

#include "prunesched/instance.hpp"

namespace prunesched {

enum class PriorityRule { Smith, Jackson };

inline PriorityRule rule_for(Objective objective) {
  return objective == Objective::Wct ? PriorityRule::Smith : PriorityRule::Jackson;
}

// The fixed priority ordering proper schedules are relative to.
// perm[k] is the 0-based job offset (into Instance::jobs()) at priority
// position k; positions run 0..n-1.
struct PriorityOrder {
  PriorityRule rule = PriorityRule::Smith;
  std::vector<int> perm;

  int position_count() const { return static_cast<int>(perm.size()); }

  friend bool operator==(const PriorityOrder&, const PriorityOrder&) = default;
};

// Smith order (non-increasing w/p, compared by exact cross-multiplication)
// for Wct; Jackson/EDD order (non-decreasing d) for Lmax and Wtardy.
// Stable: ties keep input order.
PriorityOrder priority_order(const Instance& instance, Objective objective);

}  // namespace prunesched

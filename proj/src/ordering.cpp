#include "prunesched/ordering.hpp"

#include <algorithm>
#include <numeric>

namespace prunesched {

PriorityOrder priority_order(const Instance& instance, Objective objective) {
  PriorityOrder order;
  order.rule = rule_for(objective);
  order.perm.resize(static_cast<std::size_t>(instance.job_count()));
  std::iota(order.perm.begin(), order.perm.end(), 0);

  const auto& jobs = instance.jobs();
  if (order.rule == PriorityRule::Smith) {
    // w_a/p_a > w_b/p_b  <=>  w_a*p_b > w_b*p_a; products fit in 64 bits
    // because the instance passed the n*P*w_max load-time bound.
    std::stable_sort(order.perm.begin(), order.perm.end(), [&jobs](int a, int b) {
      const auto& ja = jobs[static_cast<std::size_t>(a)];
      const auto& jb = jobs[static_cast<std::size_t>(b)];
      return ja.w * jb.p > jb.w * ja.p;
    });
  } else {
    std::stable_sort(order.perm.begin(), order.perm.end(), [&jobs](int a, int b) {
      return jobs[static_cast<std::size_t>(a)].d < jobs[static_cast<std::size_t>(b)].d;
    });
  }
  return order;
}

}  // namespace prunesched

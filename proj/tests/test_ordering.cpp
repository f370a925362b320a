#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "prunesched/ordering.hpp"

using namespace prunesched;

TEST_CASE("Smith order sorts by exact efficiency ratios") {
  // efficiencies 2, 1, 3 -> jobs 3, 1, 2
  const auto instance = testutil::make_instance(1, {{2, 4, 0}, {1, 1, 0}, {3, 9, 0}});
  const auto order = priority_order(instance, Objective::Wct);
  CHECK(order.rule == PriorityRule::Smith);
  CHECK(order.perm == std::vector<int>{2, 0, 1});
}

TEST_CASE("Jackson order is EDD with stable ties") {
  const auto instance = testutil::make_instance(1, {{1, 0, 5}, {1, 0, 2}, {1, 0, 2}});
  const auto order = priority_order(instance, Objective::Lmax);
  CHECK(order.rule == PriorityRule::Jackson);
  CHECK(order.perm == std::vector<int>{1, 2, 0});
  CHECK(priority_order(instance, Objective::Wtardy).perm == std::vector<int>{1, 2, 0});
}

TEST_CASE("all-tied Smith order is the identity") {
  const auto instance = testutil::make_instance(2, {{1, 1, 0}, {1, 1, 0}});
  CHECK(priority_order(instance, Objective::Wct).perm == std::vector<int>{0, 1});
}

TEST_CASE("priority order is a permutation") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Instance instance = testutil::random_instance(rng);
    for (const Objective objective : {Objective::Wct, Objective::Lmax, Objective::Wtardy}) {
      auto perm = priority_order(instance, objective).perm;
      std::sort(perm.begin(), perm.end());
      for (int k = 0; k < instance.job_count(); ++k)
        REQUIRE(perm[static_cast<std::size_t>(k)] == k);
    }
  }
}

// The classical exchange property: swapping adjacent jobs of a Smith order
// never decreases the single-machine weighted completion time.
TEST_CASE("adjacent Smith swaps never improve a single-machine sequence") {
  const auto sequence_cost = [](const Instance& instance, const std::vector<int>& sequence) {
    std::int64_t load = 0;
    std::int64_t cost = 0;
    for (const int job : sequence) {
      load += instance.job(job).p;
      cost += instance.job(job).w * load;
    }
    return cost;
  };

  SplitMix64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Instance instance = testutil::random_instance(rng, 8, 1);
    auto sequence = priority_order(instance, Objective::Wct).perm;
    const std::int64_t base = sequence_cost(instance, sequence);
    for (std::size_t k = 0; k + 1 < sequence.size(); ++k) {
      std::swap(sequence[k], sequence[k + 1]);
      CHECK(sequence_cost(instance, sequence) >= base);
      std::swap(sequence[k], sequence[k + 1]);
    }
  }
}

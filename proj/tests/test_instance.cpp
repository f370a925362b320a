#include <doctest.h>

#include "helpers.hpp"
#include "prunesched/instance.hpp"
#include "prunesched/rng.hpp"

using namespace prunesched;

TEST_CASE("parse transcribes jobs in file order") {
  const Instance instance = parse_instance("machines 2\njob 2 4 5\njob 1 1 3\n");
  CHECK(instance.machines() == 2);
  CHECK(instance.job_count() == 2);
  CHECK(instance.job(0) == Job{1, 2, 4, 5});
  CHECK(instance.job(1) == Job{2, 1, 1, 3});
  CHECK(instance.total_p() == 3);
  CHECK(instance.p_max() == 2);
}

TEST_CASE("parse accepts the minimal instance") {
  const Instance instance = parse_instance("machines 1\njob 1 1 1\n");
  CHECK(instance.machines() == 1);
  CHECK(instance.job_count() == 1);
  CHECK(instance.total_p() == 1);
  CHECK(instance.p_max() == 1);
}

TEST_CASE("parse skips comments and blank lines") {
  const Instance instance =
      parse_instance("# generated\n\nmachines 2\n  # indented comment\njob 3 1 2\n\njob 1 0 9\n");
  CHECK(instance.machines() == 2);
  CHECK(instance.job_count() == 2);
  CHECK(instance.job(1).d == 9);
}

TEST_CASE("parse diagnostics carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_instance("machines 2\njob 0 4 5\n"), "p must be >= 1 (line 2)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_instance("machines 0\njob 1 1 1\n"), "m must be >= 1 (line 1)",
                       ParseError);
  CHECK_THROWS_AS(parse_instance("job 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_instance(""), ParseError);
  CHECK_THROWS_AS(parse_instance("machines 1\n"), ParseError);           // zero jobs
  CHECK_THROWS_AS(parse_instance("machines 1\njob 1 2\n"), ParseError);  // missing field
  CHECK_THROWS_AS(parse_instance("machines 1\njob 1 2 3 4\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("machines 1\njob 1 -2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("machines 1\njob one 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("machines 1\ntask 1 2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_instance("machines 1\njob 99999999999999999999 1 1\n"), ParseError);
}

TEST_CASE("parse rejects instances whose objective could overflow") {
  // n * P * w_max = 1 * 2^40 * 2^24 = 2^64 > INT64_MAX.
  const std::string text = "machines 1\njob 1099511627776 16777216 1\n";
  CHECK_THROWS_AS(parse_instance(text), ParseError);
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("serialization round-trips") {
  const std::string text = "# comment\nmachines 2\n\njob 2 4 5\njob 1 1 3\n";
  const Instance parsed = parse_instance(text);
  const std::string canonical = serialize_instance(parsed);
  CHECK(canonical == "machines 2\njob 2 4 5\njob 1 1 3\n");
  CHECK(parse_instance(canonical) == parsed);

  SplitMix64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance instance = testutil::random_instance(rng);
    CHECK(parse_instance(serialize_instance(instance)) == instance);
  }
}

TEST_CASE("generator emits the unique singleton instance") {
  const Instance instance = generate_instance({1, 1, 1, 0, DueMode::Loose, 7});
  CHECK(instance.job_count() == 1);
  CHECK(instance.job(0).p == 1);
  CHECK(instance.job(0).w == 0);
  CHECK(instance.job(0).d == 1);
}

TEST_CASE("generator is deterministic and respects ranges") {
  const GenParams params{5, 2, 3, 3, DueMode::Tight, 42};
  const Instance a = generate_instance(params);
  const Instance b = generate_instance(params);
  CHECK(a == b);

  SplitMix64 seeds(99);
  for (int trial = 0; trial < 60; ++trial) {
    GenParams p;
    p.n = static_cast<int>(seeds.uniform(1, 9));
    p.m = static_cast<int>(seeds.uniform(1, 3));
    p.pmax = seeds.uniform(1, 6);
    p.wmax = seeds.uniform(0, 6);
    p.due = static_cast<DueMode>(seeds.uniform(0, 2));
    p.seed = seeds.next();
    const Instance instance = generate_instance(p);
    REQUIRE(instance.job_count() == p.n);
    const std::int64_t total = instance.total_p();
    for (const Job& job : instance.jobs()) {
      CHECK(job.p >= 1);
      CHECK(job.p <= p.pmax);
      CHECK(job.w >= 0);
      CHECK(job.w <= p.wmax);
      switch (p.due) {
        case DueMode::Tight:
          CHECK(job.d >= 1);
          CHECK(job.d <= (total + p.m - 1) / p.m);
          break;
        case DueMode::Loose:
          CHECK(job.d >= 1);
          CHECK(job.d <= total);
          break;
        case DueMode::Common:
          CHECK(job.d == (total + 2 * p.m - 1) / (2 * p.m));
          break;
      }
    }
  }
}

TEST_CASE("generator rejects invalid parameters") {
  CHECK_THROWS_AS(generate_instance({0, 1, 1, 0, DueMode::Loose, 1}), ValidationError);
  CHECK_THROWS_AS(generate_instance({1, 0, 1, 0, DueMode::Loose, 1}), ValidationError);
  CHECK_THROWS_AS(generate_instance({1, 1, 0, 0, DueMode::Loose, 1}), ValidationError);
  CHECK_THROWS_AS(generate_instance({1, 1, 1, -1, DueMode::Loose, 1}), ValidationError);
}

TEST_CASE("create validates directly constructed jobs") {
  CHECK_THROWS_AS(testutil::make_instance(1, {{0, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(testutil::make_instance(1, {{1, -1, 1}}), ValidationError);
  CHECK_THROWS_AS(testutil::make_instance(1, {{1, 1, -1}}), ValidationError);
  CHECK_THROWS_AS(testutil::make_instance(0, {{1, 1, 1}}), ValidationError);
  CHECK_THROWS_AS(Instance::create(1, {}), ValidationError);
}

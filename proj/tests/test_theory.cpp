#include <doctest.h>

#include <vector>

#include "ratiomin/theory.hpp"
#include "test_support.hpp"

using namespace ratiomin;
using testsupport::make_instance;

TEST_SUITE_BEGIN("theory");

namespace {

std::vector<BigInt> big(std::vector<long long> values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

}  // namespace

TEST_CASE("z array fixtures") {
  SUBCASE("mixed signs") {
    const auto out = z_array(big({1, 2}), big({2, 1}));
    CHECK(out.z == big({-3, 3}));
    CHECK(out.has_nonpositive);
    CHECK_FALSE(out.all_zero);
    CHECK_FALSE(out.common_ratio.has_value());
  }

  SUBCASE("proportional arrays vanish") {
    const auto out = z_array(big({1, 2}), big({2, 4}));
    CHECK(out.z == big({0, 0}));
    CHECK(out.has_nonpositive);
    CHECK(out.all_zero);
    REQUIRE(out.common_ratio.has_value());
    CHECK(out.common_ratio->num == 2);
    CHECK(out.common_ratio->den == 1);
  }

  SUBCASE("single element is always zero") {
    const auto out = z_array(big({5}), big({7}));
    CHECK(out.z == big({0}));
    CHECK(out.all_zero);
    REQUIRE(out.common_ratio.has_value());
    CHECK(out.common_ratio->num == 7);
    CHECK(out.common_ratio->den == 5);
  }

  SUBCASE("validation") {
    CHECK_THROWS_AS(z_array(big({1, 2}), big({1})), Error);
    CHECK_THROWS_AS(z_array(big({}), big({})), Error);
    CHECK_THROWS_AS(z_array(big({1, 0}), big({1, 2})), Error);
  }
}

TEST_CASE("monotone trace check") {
  const auto inst = make_instance({1, 3, 6, 4}, {10, 3, 12, 6});
  const auto outcome = greedy_select(inst, 3);
  CHECK(check_monotone_trace(outcome.trace));

  SUBCASE("single-step traces pass trivially") {
    CHECK(check_monotone_trace(greedy_select(inst, 1).trace));
  }

  SUBCASE("a swapped trace is rejected") {
    GreedyTrace mutated = outcome.trace;
    std::swap(mutated.q.front(), mutated.q.back());
    CHECK_FALSE(check_monotone_trace(mutated));
  }
}

TEST_CASE("intersection fixtures") {
  SUBCASE("unequal-ratio minimizer shares an index with greedy") {
    const auto inst = make_instance({1, 3, 6, 4}, {10, 3, 12, 6});
    const auto verdicts = check_intersection_theorem(inst, 3);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].minimizer == std::vector<int>{1, 3, 4});
    CHECK(verdicts[0].hypothesis_unequal_ratios);
    CHECK(verdicts[0].intersection_nonempty);
    CHECK_FALSE(verdicts[0].greedy_exact);  // greedy is 10/25 > 11/28 here
    CHECK(verdicts[0].passes());
  }

  SUBCASE("all-equal ratios fall back to value exactness") {
    const auto inst = make_instance({2, 4, 6, 8, 10}, {1, 2, 3, 4, 5});
    const auto verdicts = check_intersection_theorem(inst, 3);
    REQUIRE(!verdicts.empty());
    for (const auto& verdict : verdicts) {
      CHECK_FALSE(verdict.hypothesis_unequal_ratios);
      CHECK(verdict.greedy_exact);
      CHECK(verdict.passes());
    }
  }

  SUBCASE("four-element example at n = 2") {
    const auto inst = make_instance({3, 2, 5, 7}, {6, 2, 2, 8});
    const auto verdicts = check_intersection_theorem(inst, 2);
    REQUIRE(verdicts.size() == 1);
    CHECK(verdicts[0].hypothesis_unequal_ratios);
    CHECK(verdicts[0].intersection_nonempty);
    CHECK(verdicts[0].passes());
  }
}

TEST_CASE("pair exactness fixtures") {
  const auto example = make_instance({3, 2, 5, 7}, {6, 2, 2, 8});
  const auto v1 = check_n2_exactness(example);
  CHECK(v1.exact);
  CHECK(v1.greedy_value.num == 5);
  CHECK(v1.greedy_value.den == 8);
  CHECK(v1.greedy_set == std::vector<int>{1, 2});

  const auto inexact3 = make_instance({1, 3, 6, 4}, {10, 3, 12, 6});
  const auto v2 = check_n2_exactness(inexact3);
  CHECK(v2.exact);
  CHECK(v2.greedy_value.num == 4);
  CHECK(v2.greedy_value.den == 13);

  const auto constant = make_instance({2, 4, 6}, {1, 2, 3});
  CHECK(check_n2_exactness(constant).exact);

  const auto tiny = make_instance({1, 2}, {2, 1});
  CHECK_THROWS_AS(check_n2_exactness(tiny), Error);
}

TEST_CASE("random instances are reproducible") {
  const auto first = random_instance(1, 4, 4);
  const auto second = random_instance(1, 4, 4);
  CHECK(first.a == second.a);
  CHECK(first.b == second.b);

  // frozen stream values for the documented generator
  CHECK(first.a == big({2, 8, 15, 12}));
  CHECK(first.b == big({10, 1, 6, 6}));

  const auto other = random_instance(2, 4, 4);
  CHECK(other.a != first.a);

  for (const auto& v : first.a) {
    CHECK(v >= 1);
    CHECK(v <= 16);
  }
  CHECK_THROWS_AS(random_instance(1, 1, 4), Error);
  CHECK_THROWS_AS(random_instance(1, 4, 0), ConfigError);
}

TEST_CASE("sweeps run clean on a small budget") {
  SweepConfig config;
  config.trials = 300;
  config.max_N = 16;
  config.magnitude_bits = 8;
  config.seed = 99;

  const auto monotone = sweep_monotone_trace(config);
  CHECK(monotone.checked == 300);
  CHECK(monotone.violations == 0);

  const auto zsign = sweep_z_array(config);
  CHECK(zsign.checked == 300);
  CHECK(zsign.violations == 0);
}

TEST_CASE("corpus sweep runs clean and counts skips under a tiny cap") {
  SweepConfig config;
  config.trials = 40;
  config.max_N = 9;
  config.magnitude_bits = 8;
  config.seed = 5;

  const auto outcome = sweep_corpus(config);
  CHECK(outcome.intersection.checked > 0);
  CHECK(outcome.intersection.violations == 0);
  CHECK(outcome.pair_exactness.violations == 0);
  CHECK(outcome.dinkelbach_agreement.violations == 0);
  CHECK(outcome.reduced_agreement.violations == 0);
  CHECK(outcome.reduced_count.violations == 0);

  SweepConfig capped = config;
  capped.max_N = 12;
  capped.cap = 10;
  const auto limited = sweep_corpus(capped);
  CHECK(limited.intersection.skipped > 0);
  CHECK(limited.intersection.violations == 0);
}

TEST_CASE("the inexactness control trips on the known instance") {
  const auto control = control_greedy_inexact();
  CHECK(control.checked == 1);
  CHECK(control.violations == 0);
}

TEST_CASE("zero trials produce an empty report") {
  SweepConfig config;
  config.trials = 0;
  const auto report = run_verification(config);
  CHECK(report.all_passed());
  for (const auto& property : report.properties) {
    CHECK(property.checked == 0);
    CHECK(property.violations == 0);
  }
}

TEST_SUITE_END();

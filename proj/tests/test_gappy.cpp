#include <doctest.h>

#include <cmath>
#include <vector>

#include "ratiomin/gappy.hpp"
#include "ratiomin/rng.hpp"

using namespace ratiomin;

TEST_SUITE_BEGIN("gappy");

namespace {

// one unit vector plus a single orthogonal unit column
std::pair<std::vector<double>, Matrix> worked_example() {
  std::vector<double> u{2.0 / 3, 2.0 / 3, 1.0 / 3};
  Matrix uhat;
  uhat.rows = 3;
  uhat.cols = 1;
  uhat.data = {1.0 / 3, -2.0 / 3, 2.0 / 3};
  return {u, uhat};
}

}  // namespace

TEST_CASE("derived arrays from the worked example") {
  auto [u, uhat] = worked_example();
  const auto gappy = build_arrays(u, uhat);

  CHECK(gappy.instance.a[0] == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(gappy.instance.a[1] == doctest::Approx(4.0 / 9).epsilon(1e-14));
  CHECK(gappy.instance.a[2] == doctest::Approx(4.0 / 9).epsilon(1e-14));
  CHECK(gappy.instance.b[0] == doctest::Approx(4.0 / 9).epsilon(1e-14));
  CHECK(gappy.instance.b[1] == doctest::Approx(4.0 / 9).epsilon(1e-14));
  CHECK(gappy.instance.b[2] == doctest::Approx(1.0 / 9).epsilon(1e-14));
}

TEST_CASE("basis validation") {
  auto [u, uhat] = worked_example();

  SUBCASE("not a unit vector") {
    std::vector<double> bad = u;
    bad[0] *= 1.5;
    CHECK_THROWS_AS(build_arrays(bad, uhat), Error);
  }

  SUBCASE("duplicate columns are not orthonormal") {
    Matrix doubled;
    doubled.rows = 3;
    doubled.cols = 2;
    doubled.data = {uhat.data[0], uhat.data[0], uhat.data[1],
                    uhat.data[1], uhat.data[2], uhat.data[2]};
    CHECK_THROWS_AS(build_arrays(u, doubled), Error);
  }

  SUBCASE("column not orthogonal to the vector") {
    Matrix skew;
    skew.rows = 3;
    skew.cols = 1;
    skew.data = {u[0], u[1], u[2]};
    CHECK_THROWS_AS(build_arrays(u, skew), Error);
  }

  SUBCASE("zero vector entry") {
    std::vector<double> zu{1, 0, 0};
    Matrix zhat;
    zhat.rows = 3;
    zhat.cols = 1;
    zhat.data = {0, 1, 0};
    try {
      build_arrays(zu, zhat);
      FAIL("expected ZeroRow");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::zero_row);
    }
  }

  SUBCASE("dimension mismatch") {
    Matrix wide = uhat;
    wide.rows = 2;
    wide.data.resize(2);
    CHECK_THROWS_AS(build_arrays(u, wide), Error);
  }
}

TEST_CASE("bound pieces on the worked example") {
  auto [u, uhat] = worked_example();
  const auto gappy = build_arrays(u, uhat);

  SUBCASE("pair selection") {
    const std::vector<int> sel{1, 2};
    const auto report = bound_check(gappy, sel);
    CHECK(report.lhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(report.rhs == doctest::Approx(std::sqrt(0.625)).epsilon(1e-12));
    CHECK(report.rhs_squared == doctest::Approx(0.625).epsilon(1e-12));
    CHECK(report.identity_error <= 1e-12);
    CHECK(report.lhs <= report.rhs + kBoundSlack);
  }

  SUBCASE("single index collapses both sides") {
    const std::vector<int> sel{3};
    const auto report = bound_check(gappy, sel);
    CHECK(report.lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(report.rhs == doctest::Approx(2.0).epsilon(1e-12));
  }

  SUBCASE("full selection restores orthogonality") {
    const std::vector<int> sel{1, 2, 3};
    const auto report = bound_check(gappy, sel);
    CHECK(report.lhs < 1e-10);
    CHECK(report.rhs_squared == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("greedy solve on the worked example") {
  auto [u, uhat] = worked_example();
  const auto solution = gappy_solve(u, uhat, 2);
  CHECK(solution.selection.indices == std::vector<int>{1, 2});
  CHECK(solution.bound.rhs_squared == doctest::Approx(0.625).epsilon(1e-12));

  const auto single = gappy_solve(u, uhat, 1);
  CHECK(single.selection.indices == std::vector<int>{1});  // ratios 1/4, 1, 4

  CHECK_THROWS_AS(gappy_solve(u, uhat, 3), Error);  // n = N rejected
}

TEST_CASE("random orthonormal pairs satisfy the identities") {
  SplitMix64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int length = 12;
    const int dims = 3;
    auto [u, uhat] = random_orthonormal_pair(rng.next(), length, dims);
    const auto gappy = build_arrays(u, uhat);

    const int n = static_cast<int>(rng.next_in(1, length - 1));
    const auto solution = gappy_solve(u, uhat, n);
    CHECK(solution.bound.identity_error <= 1e-12);
    CHECK(solution.bound.lhs <= solution.bound.rhs + kBoundSlack);

    const std::vector<int> everything = [&] {
      std::vector<int> all;
      for (int i = 1; i <= length; ++i) all.push_back(i);
      return all;
    }();
    CHECK(bound_check(gappy, everything).lhs < 1e-10);
  }
}

TEST_SUITE_END();

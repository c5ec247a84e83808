#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ratiomin/greedy.hpp"
#include "ratiomin/instance.hpp"

namespace ratiomin {

/// Dense row-major matrix of doubles.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  double operator()(int r, int c) const {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
  double& operator()(int r, int c) {
    return data[static_cast<std::size_t>(r) * cols + c];
  }
};

inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kBoundSlack = 1e-12;

/// A unit vector u, a complement basis with orthonormal columns that are
/// also orthogonal to u, and the derived selection instance with
/// a[i] = sum of squares of row i of the complement basis and b[i] = u[i]^2.
/// This module runs in binary64 throughout: basis entries are irrational in
/// general, so the derived arrays are not exact integers.
struct GappyInstance {
  std::vector<double> u;
  Matrix uhat;
  FloatInstance instance;
};

/// Validates the basis pair (unit norm within 1e-12, orthonormality within
/// 1e-10 per entry) and derives the arrays. Rows where a[i] or b[i] would be
/// exactly zero violate the positivity premise and are rejected.
GappyInstance build_arrays(std::vector<double> u, Matrix uhat);

/// Interpolation-error bound pieces for one selection P (an index set):
///   lhs = |u' P P' Uhat|_2 / (u' P P' u), the sharp factor,
///   rhs = |P' Uhat|_F / |P' u|, its upper bound,
///   rhs^2 equals the selected ratio sum(a)/sum(b) up to rounding.
/// lhs and rhs are computed from the raw basis; selected_ratio from the
/// derived arrays, giving two independent routes to the same number.
struct BoundReport {
  double lhs = 0;
  double rhs = 0;
  double rhs_squared = 0;
  double selected_ratio = 0;
  double identity_error = 0;  // |rhs^2 - selected_ratio| / selected_ratio
};

BoundReport bound_check(const GappyInstance& gappy,
                        std::span<const int> selection);

struct GappySolution {
  BasicSelection<double> selection;
  BasicTrace<double> trace;
  BoundReport bound;
};

/// Greedy selection on the derived instance, then a bound check on the
/// chosen set.
GappySolution gappy_solve(std::vector<double> u, Matrix uhat, int n);

/// Seeded random orthonormal pair: u plus `complement_dims` columns,
/// produced by re-orthogonalized Gram-Schmidt on random vectors. Seeds whose
/// vectors come out degenerate (or with an exactly zero derived row) are
/// re-drawn deterministically.
std::pair<std::vector<double>, Matrix> random_orthonormal_pair(
    std::uint64_t seed, int length, int complement_dims);

}  // namespace ratiomin

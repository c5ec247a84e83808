#include "ratiomin/gappy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ratiomin/rng.hpp"

namespace ratiomin {

namespace {

double column_dot(const Matrix& m, int c1, int c2) {
  double sum = 0;
  for (int r = 0; r < m.rows; ++r) sum += m(r, c1) * m(r, c2);
  return sum;
}

double vector_column_dot(const std::vector<double>& v, const Matrix& m, int c) {
  double sum = 0;
  for (int r = 0; r < m.rows; ++r) sum += v[r] * m(r, c);
  return sum;
}

}  // namespace

GappyInstance build_arrays(std::vector<double> u, Matrix uhat) {
  const int length = static_cast<int>(u.size());
  if (uhat.rows != length) {
    throw Error(Errc::mismatched_lengths,
                "basis has " + std::to_string(uhat.rows) + " rows, vector has " +
                    std::to_string(length) + " entries");
  }
  if (uhat.cols < 1) {
    throw Error(Errc::too_short, "complement basis needs at least one column");
  }

  double norm_sq = 0;
  for (double v : u) norm_sq += v * v;
  if (std::abs(norm_sq - 1.0) > kUnitNormTol) {
    throw Error(Errc::not_unit, "vector norm differs from 1 by more than " +
                                    std::to_string(kUnitNormTol));
  }
  for (int c1 = 0; c1 < uhat.cols; ++c1) {
    for (int c2 = c1; c2 < uhat.cols; ++c2) {
      const double expected = c1 == c2 ? 1.0 : 0.0;
      if (std::abs(column_dot(uhat, c1, c2) - expected) > kOrthoTol) {
        throw Error(Errc::not_orthonormal,
                    "columns " + std::to_string(c1 + 1) + " and " +
                        std::to_string(c2 + 1) + " are not orthonormal");
      }
    }
    if (std::abs(vector_column_dot(u, uhat, c1)) > kOrthoTol) {
      throw Error(Errc::not_orthonormal,
                  "column " + std::to_string(c1 + 1) +
                      " is not orthogonal to the vector");
    }
  }

  std::vector<double> a(length), b(length);
  for (int i = 0; i < length; ++i) {
    double row_sq = 0;
    for (int c = 0; c < uhat.cols; ++c) row_sq += uhat(i, c) * uhat(i, c);
    a[i] = row_sq;
    b[i] = u[i] * u[i];
    if (a[i] == 0) {
      throw Error(Errc::zero_row,
                  "row " + std::to_string(i + 1) +
                      " of the complement basis is zero",
                  i + 1, "a");
    }
    if (b[i] == 0) {
      throw Error(Errc::zero_row,
                  "entry " + std::to_string(i + 1) + " of the vector is zero",
                  i + 1, "b");
    }
  }

  GappyInstance gappy;
  gappy.instance = validate_instance(std::move(a), std::move(b));
  gappy.u = std::move(u);
  gappy.uhat = std::move(uhat);
  return gappy;
}

BoundReport bound_check(const GappyInstance& gappy,
                        std::span<const int> selection) {
  const auto ratio = ratio_of(gappy.instance, selection);  // validates indices

  double selected_u_sq = 0;
  for (int idx : selection) {
    selected_u_sq += gappy.u[idx - 1] * gappy.u[idx - 1];
  }
  if (selected_u_sq == 0) {
    throw Error(Errc::degenerate_selection,
                "selected entries of the vector are all zero");
  }

  // lhs from the raw basis
  double cross_sq = 0;
  for (int c = 0; c < gappy.uhat.cols; ++c) {
    double w = 0;
    for (int idx : selection) w += gappy.u[idx - 1] * gappy.uhat(idx - 1, c);
    cross_sq += w * w;
  }
  const double lhs = std::sqrt(cross_sq) / selected_u_sq;

  // rhs from the raw basis as well; the derived arrays give the second route
  double frobenius_sq = 0;
  for (int idx : selection) {
    for (int c = 0; c < gappy.uhat.cols; ++c) {
      const double v = gappy.uhat(idx - 1, c);
      frobenius_sq += v * v;
    }
  }
  const double rhs_squared = frobenius_sq / selected_u_sq;
  const double rhs = std::sqrt(rhs_squared);
  const double selected_ratio = ratio.num / ratio.den;

  BoundReport report;
  report.lhs = lhs;
  report.rhs = rhs;
  report.rhs_squared = rhs_squared;
  report.selected_ratio = selected_ratio;
  report.identity_error = std::abs(rhs_squared - selected_ratio) / selected_ratio;

  if (report.lhs > report.rhs + kBoundSlack) {
    throw std::logic_error("bound factor exceeded its upper bound");
  }
  if (report.identity_error > kBoundSlack) {
    throw std::logic_error("squared bound drifted from the selected ratio");
  }
  return report;
}

GappySolution gappy_solve(std::vector<double> u, Matrix uhat, int n) {
  GappyInstance gappy = build_arrays(std::move(u), std::move(uhat));
  auto greedy = greedy_select(gappy.instance, n);
  GappySolution solution;
  solution.bound = bound_check(gappy, greedy.selection.indices);
  solution.selection = std::move(greedy.selection);
  solution.trace = std::move(greedy.trace);
  return solution;
}

std::pair<std::vector<double>, Matrix> random_orthonormal_pair(
    std::uint64_t seed, int length, int complement_dims) {
  if (complement_dims < 1 || complement_dims + 1 > length) {
    throw ConfigError("need 1 <= complement_dims <= length - 1");
  }
  const int vectors = complement_dims + 1;
  for (int attempt = 0; attempt < 100; ++attempt) {
    SplitMix64 rng(seed + static_cast<std::uint64_t>(attempt) * 0x9E37ull);
    std::vector<std::vector<double>> basis(vectors,
                                           std::vector<double>(length));
    bool degenerate = false;
    for (auto& vec : basis) {
      for (double& v : vec) v = 2.0 * rng.next_unit() - 1.0;
    }
    for (int i = 0; i < vectors && !degenerate; ++i) {
      for (int pass = 0; pass < 2; ++pass) {  // re-orthogonalize once
        for (int j = 0; j < i; ++j) {
          double dot = 0;
          for (int k = 0; k < length; ++k) dot += basis[i][k] * basis[j][k];
          for (int k = 0; k < length; ++k) basis[i][k] -= dot * basis[j][k];
        }
      }
      double norm_sq = 0;
      for (double v : basis[i]) norm_sq += v * v;
      if (norm_sq < 1e-12) {
        degenerate = true;
        break;
      }
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (double& v : basis[i]) v *= inv;
    }
    if (degenerate) continue;

    Matrix uhat;
    uhat.rows = length;
    uhat.cols = complement_dims;
    uhat.data.assign(static_cast<std::size_t>(length) * complement_dims, 0.0);
    for (int c = 0; c < complement_dims; ++c) {
      for (int r = 0; r < length; ++r) uhat(r, c) = basis[c + 1][r];
    }

    bool zero_row = false;
    for (int r = 0; r < length && !zero_row; ++r) {
      if (basis[0][r] == 0) zero_row = true;
      double row_sq = 0;
      for (int c = 0; c < complement_dims; ++c) row_sq += uhat(r, c) * uhat(r, c);
      if (row_sq == 0) zero_row = true;
    }
    if (zero_row) continue;

    return {std::move(basis[0]), std::move(uhat)};
  }
  throw std::logic_error("could not draw a usable orthonormal pair");
}

}  // namespace ratiomin

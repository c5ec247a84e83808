#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "ratiomin/bigint.hpp"
#include "ratiomin/errors.hpp"

namespace ratiomin {

/// A ratio of element sums, kept as the raw (numerator, denominator) pair.
/// Never reduced and never divided: ordering and equality go through
/// cross-multiplication, which is exact for integer scalars.
template <class Scalar>
struct Ratio {
  Scalar num{};
  Scalar den{};
};

using ExactRatio = Ratio<BigInt>;
using FloatRatio = Ratio<double>;

/// Sign of lhs.num * rhs.den - rhs.num * lhs.den. Requires positive
/// denominators, which every value built from a validated instance has.
template <class Scalar>
[[nodiscard]] std::strong_ordering compare_ratios(const Ratio<Scalar>& lhs,
                                                  const Ratio<Scalar>& rhs) {
  const Scalar cross_l = lhs.num * rhs.den;
  const Scalar cross_r = rhs.num * lhs.den;
  if (cross_l < cross_r) return std::strong_ordering::less;
  if (cross_r < cross_l) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

template <class Scalar>
[[nodiscard]] bool ratio_equal(const Ratio<Scalar>& lhs,
                               const Ratio<Scalar>& rhs) {
  return compare_ratios(lhs, rhs) == std::strong_ordering::equal;
}

/// Paired positive arrays of equal length N >= 2. Values are immutable after
/// construction; every operation on them is a pure function, safe to call
/// concurrently. Build through validate_instance.
template <class Scalar>
struct Instance {
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  int size() const { return static_cast<int>(a.size()); }
};

/// Exact path: arbitrary-precision integers (decimal inputs are scaled by a
/// common power of ten on load). All verification runs on this type.
using ProblemInstance = Instance<BigInt>;

/// Float path: binary64, used for benchmarking. No overflow or rounding
/// guarantee; comparisons still use cross-multiplication.
using FloatInstance = Instance<double>;

namespace detail {

template <class Scalar>
bool positive_scalar(const Scalar& value) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    return std::isfinite(value) && value > 0;
  } else {
    return value > 0;
  }
}

}  // namespace detail

/// Checks lengths match, N >= 2 and strict positivity of every element.
/// Reports the first offending index (1-based) and array name.
template <class Scalar>
Instance<Scalar> validate_instance(std::vector<Scalar> a, std::vector<Scalar> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::mismatched_lengths,
                "arrays have different lengths: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
  }
  if (a.size() < 2) {
    throw Error(Errc::too_short, "need at least 2 elements, got " +
                                     std::to_string(a.size()));
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!detail::positive_scalar(a[i])) {
      throw Error(Errc::non_positive_element,
                  "a[" + std::to_string(i + 1) + "] is not a positive value",
                  static_cast<long long>(i + 1), "a");
    }
    if (!detail::positive_scalar(b[i])) {
      throw Error(Errc::non_positive_element,
                  "b[" + std::to_string(i + 1) + "] is not a positive value",
                  static_cast<long long>(i + 1), "b");
    }
  }
  return Instance<Scalar>{std::move(a), std::move(b)};
}

inline FloatInstance to_float(const ProblemInstance& inst) {
  FloatInstance out;
  out.a.reserve(inst.a.size());
  out.b.reserve(inst.b.size());
  for (const BigInt& v : inst.a) out.a.push_back(v.convert_to<double>());
  for (const BigInt& v : inst.b) out.b.push_back(v.convert_to<double>());
  return out;
}

/// Sum of a and of b over a set of distinct 1-based indices. The result is
/// independent of index order in the exact path (integer addition commutes);
/// the float path sums in the order given.
template <class Scalar>
Ratio<Scalar> ratio_of(const Instance<Scalar>& inst,
                       std::span<const int> indices) {
  if (indices.empty()) {
    throw Error(Errc::empty_selection, "selection must not be empty");
  }
  std::vector<char> seen(inst.size(), 0);
  Ratio<Scalar> total{};
  for (int idx : indices) {
    if (idx < 1 || idx > inst.size()) {
      throw Error(Errc::index_out_of_range,
                  "index " + std::to_string(idx) + " outside [1, " +
                      std::to_string(inst.size()) + "]",
                  idx);
    }
    if (seen[idx - 1]) {
      throw Error(Errc::duplicate_index,
                  "index " + std::to_string(idx) + " appears twice", idx);
    }
    seen[idx - 1] = 1;
    total.num += inst.a[idx - 1];
    total.den += inst.b[idx - 1];
  }
  return total;
}

enum class SolverKind { greedy, brute, reduced, dinkelbach };

constexpr const char* solver_name(SolverKind kind) {
  switch (kind) {
    case SolverKind::greedy: return "greedy";
    case SolverKind::brute: return "brute";
    case SolverKind::reduced: return "reduced";
    case SolverKind::dinkelbach: return "dinkelbach";
  }
  return "unknown";
}

/// An index set of size n with its ratio value and the solver that found it.
/// indices are ascending and 1-based.
template <class Scalar>
struct BasicSelection {
  std::vector<int> indices;
  Ratio<Scalar> value;
  SolverKind solver{};
};

using Selection = BasicSelection<BigInt>;

/// Per-iteration record of a greedy run: picks in pick order and the ratio
/// q[k] after each pick. q[k] holds the running numerator/denominator sums,
/// so the trace doubles as the partial-sum record. ties_encountered is true
/// if any iteration's minimum was attained by more than one candidate.
template <class Scalar>
struct BasicTrace {
  std::vector<int> picks;
  std::vector<Ratio<Scalar>> q;
  bool ties_encountered = false;
};

using GreedyTrace = BasicTrace<BigInt>;

}  // namespace ratiomin

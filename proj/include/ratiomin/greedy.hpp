#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ratiomin/instance.hpp"

namespace ratiomin {

struct GreedyStep {
  int index = 0;  // 1-based
  bool tie = false;
};

namespace detail {

template <class Scalar>
struct ScanBest {
  int pos = -1;  // 0-based, -1 when every index was excluded
  bool tie = false;
  Ratio<Scalar> augmented{};
};

/// One left-to-right pass over the arrays. Each candidate costs one addition
/// on the numerator, one on the denominator, and a cross-multiplied
/// comparison against the incumbent. Equal candidates never replace the
/// incumbent, so the smallest index wins ties.
template <class Scalar>
ScanBest<Scalar> scan_augmented_min(const Instance<Scalar>& inst,
                                    const Ratio<Scalar>& partial,
                                    const std::vector<char>& excluded) {
  ScanBest<Scalar> best;
  const int count = inst.size();
  for (int k = 0; k < count; ++k) {
    if (excluded[k]) continue;
    Ratio<Scalar> cand{partial.num + inst.a[k], partial.den + inst.b[k]};
    if (best.pos < 0) {
      best.pos = k;
      best.augmented = std::move(cand);
      continue;
    }
    const auto order = compare_ratios(cand, best.augmented);
    if (order == std::strong_ordering::less) {
      best.pos = k;
      best.augmented = std::move(cand);
      best.tie = false;
    } else if (order == std::strong_ordering::equal) {
      best.tie = true;
    }
  }
  return best;
}

}  // namespace detail

/// Single augmentation step: the smallest index k outside `excluded`
/// minimizing (partial_num + a[k]) / (partial_den + b[k]). The partial sums
/// are trusted to equal the sums over `excluded` (zero when it is empty).
/// tie is true iff at least two candidates attain the minimum.
template <class Scalar>
GreedyStep greedy_step(const Instance<Scalar>& inst, const Scalar& partial_num,
                       const Scalar& partial_den,
                       std::span<const int> excluded) {
  std::vector<char> mask(inst.size(), 0);
  for (int idx : excluded) {
    if (idx < 1 || idx > inst.size()) {
      throw Error(Errc::index_out_of_range,
                  "excluded index " + std::to_string(idx) + " outside [1, " +
                      std::to_string(inst.size()) + "]",
                  idx);
    }
    mask[idx - 1] = 1;
  }
  const auto best = detail::scan_augmented_min(
      inst, Ratio<Scalar>{partial_num, partial_den}, mask);
  if (best.pos < 0) {
    throw Error(Errc::all_excluded, "every index is excluded");
  }
  return GreedyStep{best.pos + 1, best.tie};
}

template <class Scalar>
struct GreedyOutcome {
  BasicSelection<Scalar> selection;
  BasicTrace<Scalar> trace;
};

/// Iterative single-index augmentation: n steps, each adding the index that
/// minimizes the augmented ratio, never revisiting choices. Running sums are
/// carried between steps, so each step is one O(N) scan and the whole run
/// costs O(nN) candidate evaluations plus the O(n^2) bookkeeping of the
/// excluded set. Ties break to the smallest index, making the result
/// deterministic.
template <class Scalar>
GreedyOutcome<Scalar> greedy_select(const Instance<Scalar>& inst, int n) {
  const int count = inst.size();
  if (n < 1 || n >= count) {
    throw Error(Errc::invalid_subset_size,
                "subset size " + std::to_string(n) + " outside [1, " +
                    std::to_string(count - 1) + "]");
  }
  std::vector<char> excluded(count, 0);
  BasicTrace<Scalar> trace;
  trace.picks.reserve(n);
  trace.q.reserve(n);
  Ratio<Scalar> partial{};  // zeros before the first pick
  for (int step = 0; step < n; ++step) {
    auto best = detail::scan_augmented_min(inst, partial, excluded);
    // best.pos >= 0: fewer than N indices are excluded at this point
    excluded[best.pos] = 1;
    trace.picks.push_back(best.pos + 1);
    trace.ties_encountered = trace.ties_encountered || best.tie;
    partial = std::move(best.augmented);
    trace.q.push_back(partial);
  }
  BasicSelection<Scalar> selection;
  selection.indices = trace.picks;
  std::sort(selection.indices.begin(), selection.indices.end());
  selection.value = trace.q.back();
  selection.solver = SolverKind::greedy;
  return GreedyOutcome<Scalar>{std::move(selection), std::move(trace)};
}

}  // namespace ratiomin

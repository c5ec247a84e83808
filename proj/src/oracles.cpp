#include "ratiomin/oracles.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

#include "ratiomin/greedy.hpp"

namespace ratiomin {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is C(n-k+i, i) after this step
  }
  return result;
}

SearchSpaceCounts search_space_counts(int N, int n) {
  if (n < 1 || n >= N) {
    throw Error(Errc::invalid_subset_size,
                "subset size " + std::to_string(n) + " outside [1, " +
                    std::to_string(N - 1) + "]");
  }
  SearchSpaceCounts counts;
  counts.full = binomial(N, n);
  counts.reduced = counts.full - binomial(N - n, n);
  return counts;
}

namespace {

void check_subset_size(const ProblemInstance& inst, int n) {
  if (n < 1 || n >= inst.size()) {
    throw Error(Errc::invalid_subset_size,
                "subset size " + std::to_string(n) + " outside [1, " +
                    std::to_string(inst.size() - 1) + "]");
  }
}

void check_cap(const BigInt& candidates, unsigned long long cap,
               const char* what) {
  if (candidates > cap) {
    throw Error(Errc::enumeration_cap_exceeded,
                std::string(what) + " has " + candidates.str() +
                    " candidate sets, above the cap " + std::to_string(cap));
  }
}

// Walks every k-subset of `pool` in lexicographic order. Prefix sums of the
// current subset (on top of base_num/base_den) are rebuilt only from the
// leftmost changed slot, so advancing the last slot costs one addition per
// array. visit(slots, num, den) gets positions into `pool`.
template <class Visit>
void scan_pool(const ProblemInstance& inst, std::span<const int> pool, int k,
               const BigInt& base_num, const BigInt& base_den, Visit&& visit) {
  const int pool_size = static_cast<int>(pool.size());
  if (k == 0) {
    visit(std::span<const int>{}, base_num, base_den);
    return;
  }
  if (k > pool_size) return;

  std::vector<int> slots(k);
  std::vector<BigInt> num(k), den(k);
  auto refill = [&](int from) {
    for (int j = from; j < k; ++j) {
      const int p = pool[slots[j]];
      num[j] = (j == 0 ? base_num : num[j - 1]) + inst.a[p];
      den[j] = (j == 0 ? base_den : den[j - 1]) + inst.b[p];
    }
  };
  std::iota(slots.begin(), slots.end(), 0);
  refill(0);
  for (;;) {
    visit(std::span<const int>(slots), num[k - 1], den[k - 1]);
    int j = k - 1;
    while (j >= 0 && slots[j] == pool_size - k + j) --j;
    if (j < 0) break;
    ++slots[j];
    for (int t = j + 1; t < k; ++t) slots[t] = slots[t - 1] + 1;
    refill(j);
  }
}

struct MinTracker {
  bool has = false;
  ExactRatio best;
  std::vector<std::vector<int>> minimizers;

  // -1: candidate worse, keep going. 0: ties the minimum. 1: new minimum.
  int classify(const BigInt& num, const BigInt& den) {
    if (!has) {
      has = true;
      best = ExactRatio{num, den};
      return 1;
    }
    const BigInt cross_c = num * best.den;
    const BigInt cross_b = best.num * den;
    if (cross_c > cross_b) return -1;
    if (cross_c < cross_b) {
      best = ExactRatio{num, den};
      minimizers.clear();
      return 1;
    }
    return 0;
  }
};

// fixed: ascending 1-based indices locked into the set; slots map through
// pool to the remaining members.
std::vector<int> materialize(std::span<const int> fixed,
                             std::span<const int> slots,
                             std::span<const int> pool) {
  std::vector<int> out;
  out.reserve(fixed.size() + slots.size());
  std::vector<int> tail;
  tail.reserve(slots.size());
  for (int s : slots) tail.push_back(pool[s] + 1);
  std::merge(fixed.begin(), fixed.end(), tail.begin(), tail.end(),
             std::back_inserter(out));
  return out;
}

}  // namespace

OracleResult brute_force_min(const ProblemInstance& inst, int n,
                             unsigned long long cap) {
  check_subset_size(inst, n);
  const BigInt full = binomial(inst.size(), n);
  check_cap(full, cap, "brute force");

  std::vector<int> pool(inst.size());
  std::iota(pool.begin(), pool.end(), 0);

  MinTracker tracker;
  unsigned long long examined = 0;
  const BigInt zero = 0;
  scan_pool(inst, pool, n, zero, zero,
            [&](std::span<const int> slots, const BigInt& num,
                const BigInt& den) {
              ++examined;
              if (tracker.classify(num, den) >= 0) {
                tracker.minimizers.push_back(materialize({}, slots, pool));
              }
            });
  assert(BigInt(examined) == full);

  OracleResult result;
  result.minimizers = std::move(tracker.minimizers);
  // lexicographic enumeration keeps the list sorted already
  result.value = ratio_of(inst, result.minimizers.front());
  result.enumerated = examined;
  return result;
}

OracleResult reduced_search_min(const ProblemInstance& inst, int n,
                                std::span<const int> greedy_set,
                                unsigned long long cap) {
  check_subset_size(inst, n);
  const int count = inst.size();
  if (static_cast<int>(greedy_set.size()) != n) {
    throw Error(Errc::invalid_greedy_set,
                "greedy set has " + std::to_string(greedy_set.size()) +
                    " indices, expected " + std::to_string(n));
  }
  std::vector<char> in_greedy(count, 0);
  for (int idx : greedy_set) {
    if (idx < 1 || idx > count) {
      throw Error(Errc::invalid_greedy_set,
                  "greedy set index " + std::to_string(idx) +
                      " outside [1, " + std::to_string(count) + "]",
                  idx);
    }
    if (in_greedy[idx - 1]) {
      throw Error(Errc::invalid_greedy_set,
                  "greedy set repeats index " + std::to_string(idx), idx);
    }
    in_greedy[idx - 1] = 1;
  }

  const SearchSpaceCounts counts = search_space_counts(count, n);
  check_cap(counts.reduced, cap, "reduced search");

  std::vector<int> greedy0, rest0;  // 0-based, ascending
  for (int i = 0; i < count; ++i) {
    (in_greedy[i] ? greedy0 : rest0).push_back(i);
  }

  MinTracker tracker;
  unsigned long long examined = 0;
  const BigInt zero = 0;
  // Split by how many indices come from the greedy set: j >= 1 of them plus
  // n - j from the rest covers exactly the sets that intersect it.
  for (int j = std::max(1, n - static_cast<int>(rest0.size())); j <= n; ++j) {
    const int rest_take = n - j;
    scan_pool(inst, greedy0, j, zero, zero,
              [&](std::span<const int> gslots, const BigInt& gnum,
                  const BigInt& gden) {
                std::vector<int> fixed;
                fixed.reserve(gslots.size());
                for (int s : gslots) fixed.push_back(greedy0[s] + 1);
                scan_pool(inst, rest0, rest_take, gnum, gden,
                          [&](std::span<const int> rslots, const BigInt& num,
                              const BigInt& den) {
                            ++examined;
                            if (tracker.classify(num, den) >= 0) {
                              tracker.minimizers.push_back(
                                  materialize(fixed, rslots, rest0));
                            }
                          });
              });
  }
  assert(BigInt(examined) == counts.reduced);

  OracleResult result;
  result.minimizers = std::move(tracker.minimizers);
  std::sort(result.minimizers.begin(), result.minimizers.end());
  result.value = ratio_of(inst, result.minimizers.front());
  result.enumerated = examined;
  return result;
}

DinkelbachOutcome dinkelbach_min(const ProblemInstance& inst, int n) {
  check_subset_size(inst, n);
  const int count = inst.size();

  DinkelbachOutcome out;
  ExactRatio lambda = greedy_select(inst, n).selection.value;
  out.lambdas.push_back(lambda);

  std::vector<BigInt> transformed(count);
  std::vector<int> order(count);
  for (;;) {
    ++out.iterations;
    for (int i = 0; i < count; ++i) {
      transformed[i] = inst.a[i] * lambda.den - lambda.num * inst.b[i];
    }
    std::iota(order.begin(), order.end(), 0);
    std::partial_sort(order.begin(), order.begin() + n, order.end(),
                      [&](int lhs, int rhs) {
                        if (transformed[lhs] != transformed[rhs]) {
                          return transformed[lhs] < transformed[rhs];
                        }
                        return lhs < rhs;
                      });
    std::vector<int> chosen(order.begin(), order.begin() + n);
    std::sort(chosen.begin(), chosen.end());

    BigInt sum_t = 0, sum_a = 0, sum_b = 0;
    for (int i : chosen) {
      sum_t += transformed[i];
      sum_a += inst.a[i];
      sum_b += inst.b[i];
    }
    if (sum_t == 0) {
      std::vector<int> set1;
      set1.reserve(n);
      for (int i : chosen) set1.push_back(i + 1);
      out.result.minimizers = {std::move(set1)};
      out.result.value = ExactRatio{sum_a, sum_b};
      out.result.enumerated = static_cast<unsigned long long>(out.iterations);
      return out;
    }
    if (sum_t > 0) {
      // lambda never drops below the optimum, so the transformed minimum
      // stays <= 0
      throw std::logic_error("dinkelbach: positive transformed minimum");
    }
    lambda = ExactRatio{sum_a, sum_b};
    out.lambdas.push_back(lambda);
  }
}

}  // namespace ratiomin

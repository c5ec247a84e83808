#pragma once

#include <span>
#include <vector>

#include "ratiomin/instance.hpp"

namespace ratiomin {

inline constexpr unsigned long long kDefaultEnumerationCap = 10'000'000ull;

/// Output of an exact solver. `minimizers` lists optimal index sets
/// (each ascending, the list lexicographically sorted); `value` is the ratio
/// of the first listed set, recomputed from scratch. `enumerated` counts the
/// candidate sets the solver evaluated:
///   brute force:    C(N,n)
///   reduced search: C(N,n) - C(N-n,n)
///   dinkelbach:     one candidate set per iteration
struct OracleResult {
  std::vector<std::vector<int>> minimizers;
  ExactRatio value;
  unsigned long long enumerated = 0;
};

/// C(n, k) in exact integers; 0 when k < 0 or k > n.
BigInt binomial(int n, int k);

struct SearchSpaceCounts {
  BigInt full;
  BigInt reduced;
};

/// Candidate counts for choosing n of N indices: the unrestricted count
/// C(N,n), and the count left after discarding every set disjoint from a
/// fixed n-subset, C(N,n) - C(N-n,n). The subtrahend is zero when 2n > N.
SearchSpaceCounts search_space_counts(int N, int n);

/// Exhaustive minimum over all C(N,n) index sets. Enumeration is
/// lexicographic with incrementally maintained sums (advancing the last slot
/// costs one addition per array). Finds every minimizer. Only n = 1 and
/// n = N-1 scale linearly; when n grows proportionally with N the count
/// grows like c^N / sqrt(N) for some 1 < c <= 2, hence the cap.
OracleResult brute_force_min(const ProblemInstance& inst, int n,
                             unsigned long long cap = kDefaultEnumerationCap);

/// Exhaustive minimum restricted to sets sharing at least one index with
/// `greedy_set` (which must be a size-n set of valid indices). Guarantees the
/// optimal value and at least one optimal set; minimizers disjoint from
/// `greedy_set` are outside its search space by construction.
OracleResult reduced_search_min(const ProblemInstance& inst, int n,
                                std::span<const int> greedy_set,
                                unsigned long long cap = kDefaultEnumerationCap);

struct DinkelbachOutcome {
  OracleResult result;
  int iterations = 0;
  /// Trial values, starting from the greedy value; strictly decreasing.
  std::vector<ExactRatio> lambdas;
};

/// Parametric solver. With lambda = num/den, the size-n set minimizing
/// sum(a_i - lambda * b_i) is the n smallest values of a_i*den - num*b_i
/// (same ordering, no division). Iterates lambda <- value of that set until
/// the transformed minimum is exactly zero; the final set attains the global
/// optimum. Inner ties break to the smallest index.
DinkelbachOutcome dinkelbach_min(const ProblemInstance& inst, int n);

}  // namespace ratiomin

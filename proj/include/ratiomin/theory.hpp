#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ratiomin/greedy.hpp"
#include "ratiomin/instance.hpp"
#include "ratiomin/oracles.hpp"

namespace ratiomin {

/// Reproducibility token for a generated check: rebuild the instance with
/// random_instance(seed, N, magnitude_bits).
struct InstanceDigest {
  std::uint64_t seed = 0;
  int N = 0;
  int n = 0;
  int magnitude_bits = 0;
};

/// z[i] = x[i] * sum(y) - y[i] * sum(x). The z array sums to zero exactly,
/// so it always contains a non-positive element; if no element is strictly
/// negative they are all zero and y[i]/x[i] is one common ratio.
struct ZClassification {
  std::vector<BigInt> z;
  bool has_nonpositive = false;
  bool all_zero = false;
  std::optional<ExactRatio> common_ratio;  // y[0]/x[0] when all_zero
};

/// Requires equal lengths >= 1 and strictly positive entries.
ZClassification z_array(std::span<const BigInt> x, std::span<const BigInt> y);

/// True iff q[0] <= q[1] <= ... under cross-multiplied comparison.
bool check_monotone_trace(const GreedyTrace& trace);

/// One verdict per global minimizer J: if J's element ratios a_j/b_j are not
/// all equal, J must share an index with the greedy output; if they are all
/// equal, the greedy value must equal the optimum.
struct TheoremVerdict {
  std::vector<int> minimizer;
  bool hypothesis_unequal_ratios = false;
  bool intersection_nonempty = false;
  bool greedy_exact = false;
  InstanceDigest digest;

  bool passes() const {
    return hypothesis_unequal_ratios ? intersection_nonempty : greedy_exact;
  }
};

/// Verdicts from already-computed solver outputs.
std::vector<TheoremVerdict> intersection_verdicts(
    const ProblemInstance& inst, const GreedyOutcome<BigInt>& greedy,
    const OracleResult& brute, const InstanceDigest& digest = {});

/// Runs greedy and brute force, then grades every minimizer.
std::vector<TheoremVerdict> check_intersection_theorem(
    const ProblemInstance& inst, int n,
    unsigned long long cap = kDefaultEnumerationCap,
    const InstanceDigest& digest = {});

/// n = 2 greedy is exact: its value equals the brute-force optimum whether
/// or not the minimizer's element ratios are all equal.
struct ExactnessVerdict {
  bool exact = false;
  ExactRatio greedy_value;
  ExactRatio optimal_value;
  std::vector<int> greedy_set;
};

ExactnessVerdict check_n2_exactness(const ProblemInstance& inst,
                                    unsigned long long cap = kDefaultEnumerationCap);

/// Deterministic instance: SplitMix64 stream seeded with `seed` yields the
/// N values of a, then the N values of b, each mapped to [1, 2^magnitude_bits]
/// by masking the low bits and adding one. Identical output for identical
/// arguments on every platform.
ProblemInstance random_instance(std::uint64_t seed, int N, int magnitude_bits);

// ---------------------------------------------------------------------------
// Property sweeps

struct SweepConfig {
  long long trials = 2000;
  int max_N = 12;
  int magnitude_bits = 8;
  std::uint64_t seed = 0;
  unsigned long long cap = kDefaultEnumerationCap;
};

/// A failed check, with the instance inlined for reproduction.
struct Violation {
  InstanceDigest digest;
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::string info;
};

struct PropertyResult {
  std::string name;
  long long checked = 0;
  long long violations = 0;
  long long skipped = 0;   // candidate counts above the cap
  long long findings = 0;  // non-failure observations, see `note`
  std::string note;
  std::vector<Violation> details;  // capped at kMaxViolationDetails
};

inline constexpr std::size_t kMaxViolationDetails = 25;

/// Greedy trace is non-decreasing. Each trial draws N in [2, max_N] and runs
/// a full trace (n = N-1), which covers every smaller subset size because a
/// greedy run is a prefix of any longer one.
PropertyResult sweep_monotone_trace(const SweepConfig& config);

/// z arrays of random positive pairs (lengths 1..max_N) sum to zero, contain
/// a non-positive element, and are proportional whenever all entries vanish.
PropertyResult sweep_z_array(const SweepConfig& config);

struct CorpusSweepOutcome {
  PropertyResult intersection;         // minimizers intersect the greedy set
  PropertyResult pair_exactness;       // n = 2 greedy equals the optimum
  PropertyResult dinkelbach_agreement; // dinkelbach value == brute value
  PropertyResult reduced_agreement;    // reduced value == brute value
  PropertyResult reduced_count;        // enumerated == C(N,n) - C(N-n,n)
};

/// One pass over a seeded corpus (N in [3, max_N], every n in [2, N-1]),
/// running greedy, brute force, reduced search and dinkelbach on each
/// (instance, n) pair. Pairs whose full candidate count exceeds the cap are
/// counted as skipped, not failed.
CorpusSweepOutcome sweep_corpus(const SweepConfig& config);

/// Fixed four-element instance on which the greedy value is strictly worse
/// than the optimum at n = 3; proves the harness can detect inexactness.
PropertyResult control_greedy_inexact();

struct VerificationReport {
  SweepConfig config;
  std::vector<PropertyResult> properties;

  bool all_passed() const {
    for (const auto& property : properties) {
      if (property.violations != 0) return false;
    }
    return true;
  }
};

/// Runs every sweep plus the inexactness control (the control is skipped
/// when trials == 0 so that an empty run yields an empty report).
VerificationReport run_verification(const SweepConfig& config);

}  // namespace ratiomin

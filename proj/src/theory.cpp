#include "ratiomin/theory.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>

#include "ratiomin/rng.hpp"

namespace ratiomin {

namespace {

void check_positive_pair(std::span<const BigInt> x, std::span<const BigInt> y) {
  if (x.size() != y.size()) {
    throw Error(Errc::mismatched_lengths,
                "arrays have different lengths: " + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()));
  }
  if (x.empty()) {
    throw Error(Errc::too_short, "need at least 1 element");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] <= 0) {
      throw Error(Errc::non_positive_element,
                  "x[" + std::to_string(i + 1) + "] is not positive",
                  static_cast<long long>(i + 1), "x");
    }
    if (y[i] <= 0) {
      throw Error(Errc::non_positive_element,
                  "y[" + std::to_string(i + 1) + "] is not positive",
                  static_cast<long long>(i + 1), "y");
    }
  }
}

bool all_element_ratios_equal(const ProblemInstance& inst,
                              std::span<const int> indices) {
  const int first = indices.front() - 1;
  for (std::size_t k = 1; k < indices.size(); ++k) {
    const int i = indices[k] - 1;
    if (inst.a[first] * inst.b[i] != inst.a[i] * inst.b[first]) return false;
  }
  return true;
}

Violation make_violation(const InstanceDigest& digest,
                         const ProblemInstance& inst, std::string info) {
  Violation violation;
  violation.digest = digest;
  violation.a.reserve(inst.a.size());
  violation.b.reserve(inst.b.size());
  for (const BigInt& v : inst.a) violation.a.push_back(v.str());
  for (const BigInt& v : inst.b) violation.b.push_back(v.str());
  violation.info = std::move(info);
  return violation;
}

void record(PropertyResult& property, Violation violation) {
  ++property.violations;
  if (property.details.size() < kMaxViolationDetails) {
    property.details.push_back(std::move(violation));
  }
}

}  // namespace

ZClassification z_array(std::span<const BigInt> x, std::span<const BigInt> y) {
  check_positive_pair(x, y);
  BigInt sum_x = 0, sum_y = 0;
  for (const BigInt& v : x) sum_x += v;
  for (const BigInt& v : y) sum_y += v;

  ZClassification out;
  out.z.reserve(x.size());
  out.all_zero = true;
  BigInt total = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    BigInt z = x[i] * sum_y - y[i] * sum_x;
    total += z;
    if (z <= 0) out.has_nonpositive = true;
    if (z != 0) out.all_zero = false;
    out.z.push_back(std::move(z));
  }
  assert(total == 0);
  if (out.all_zero) {
    out.common_ratio = ExactRatio{y[0], x[0]};
  }
  return out;
}

bool check_monotone_trace(const GreedyTrace& trace) {
  for (std::size_t k = 0; k + 1 < trace.q.size(); ++k) {
    if (compare_ratios(trace.q[k], trace.q[k + 1]) ==
        std::strong_ordering::greater) {
      return false;
    }
  }
  return true;
}

std::vector<TheoremVerdict> intersection_verdicts(
    const ProblemInstance& inst, const GreedyOutcome<BigInt>& greedy,
    const OracleResult& brute, const InstanceDigest& digest) {
  std::vector<char> in_greedy(inst.size(), 0);
  for (int idx : greedy.selection.indices) in_greedy[idx - 1] = 1;

  const bool greedy_exact = ratio_equal(greedy.selection.value, brute.value);

  std::vector<TheoremVerdict> verdicts;
  verdicts.reserve(brute.minimizers.size());
  for (const std::vector<int>& minimizer : brute.minimizers) {
    TheoremVerdict verdict;
    verdict.minimizer = minimizer;
    verdict.hypothesis_unequal_ratios = !all_element_ratios_equal(inst, minimizer);
    verdict.intersection_nonempty =
        std::any_of(minimizer.begin(), minimizer.end(),
                    [&](int idx) { return in_greedy[idx - 1] != 0; });
    verdict.greedy_exact = greedy_exact;
    verdict.digest = digest;
    verdicts.push_back(std::move(verdict));
  }
  return verdicts;
}

std::vector<TheoremVerdict> check_intersection_theorem(
    const ProblemInstance& inst, int n, unsigned long long cap,
    const InstanceDigest& digest) {
  const auto greedy = greedy_select(inst, n);
  const auto brute = brute_force_min(inst, n, cap);
  return intersection_verdicts(inst, greedy, brute, digest);
}

ExactnessVerdict check_n2_exactness(const ProblemInstance& inst,
                                    unsigned long long cap) {
  if (inst.size() < 3) {
    throw Error(Errc::invalid_subset_size,
                "n = 2 needs at least 3 elements, got " +
                    std::to_string(inst.size()));
  }
  const auto greedy = greedy_select(inst, 2);
  const auto brute = brute_force_min(inst, 2, cap);
  ExactnessVerdict verdict;
  verdict.exact = ratio_equal(greedy.selection.value, brute.value);
  verdict.greedy_value = greedy.selection.value;
  verdict.optimal_value = brute.value;
  verdict.greedy_set = greedy.selection.indices;
  return verdict;
}

ProblemInstance random_instance(std::uint64_t seed, int N, int magnitude_bits) {
  if (N < 2) {
    throw Error(Errc::too_short,
                "need at least 2 elements, got " + std::to_string(N));
  }
  if (magnitude_bits < 1) {
    throw ConfigError("magnitude_bits must be at least 1");
  }
  const std::uint64_t mask = magnitude_bits >= 64
                                 ? ~0ull
                                 : ((1ull << magnitude_bits) - 1);
  SplitMix64 rng(seed);
  std::vector<BigInt> a, b;
  a.reserve(N);
  b.reserve(N);
  for (int i = 0; i < N; ++i) a.push_back(BigInt(rng.next() & mask) + 1);
  for (int i = 0; i < N; ++i) b.push_back(BigInt(rng.next() & mask) + 1);
  return validate_instance(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Sweeps

PropertyResult sweep_monotone_trace(const SweepConfig& config) {
  PropertyResult property;
  property.name = "monotone_trace";
  property.note = "full trace (n = N-1) covers every smaller subset size";
  if (config.trials <= 0 || config.max_N < 2) return property;

  SplitMix64 master(config.seed ^ 0x6d6f6e6full);
  for (long long trial = 0; trial < config.trials; ++trial) {
    const int N = static_cast<int>(master.next_in(2, config.max_N));
    const std::uint64_t instance_seed = master.next();
    const auto inst = random_instance(instance_seed, N, config.magnitude_bits);
    const auto greedy = greedy_select(inst, N - 1);
    ++property.checked;
    if (!check_monotone_trace(greedy.trace)) {
      record(property,
             make_violation({instance_seed, N, N - 1, config.magnitude_bits},
                            inst, "greedy trace decreased"));
    }
  }
  return property;
}

PropertyResult sweep_z_array(const SweepConfig& config) {
  PropertyResult property;
  property.name = "z_array_sign";
  if (config.trials <= 0) return property;

  const int max_len = std::max(1, config.max_N);
  const std::uint64_t mask = config.magnitude_bits >= 64
                                 ? ~0ull
                                 : ((1ull << config.magnitude_bits) - 1);
  SplitMix64 master(config.seed ^ 0x7a615272ull);
  for (long long trial = 0; trial < config.trials; ++trial) {
    const int len = static_cast<int>(master.next_in(1, max_len));
    const std::uint64_t pair_seed = master.next();
    SplitMix64 rng(pair_seed);
    std::vector<BigInt> x, y;
    x.reserve(len);
    y.reserve(len);
    for (int i = 0; i < len; ++i) x.push_back(BigInt(rng.next() & mask) + 1);
    for (int i = 0; i < len; ++i) y.push_back(BigInt(rng.next() & mask) + 1);

    const auto classified = z_array(x, y);
    ++property.checked;

    BigInt total = 0;
    for (const BigInt& z : classified.z) total += z;

    std::string failure;
    if (total != 0) {
      failure = "z does not sum to zero";
    } else if (!classified.has_nonpositive) {
      failure = "no non-positive element";
    } else if (classified.all_zero) {
      // proportionality re-checked from the raw arrays
      for (int i = 0; i < len; ++i) {
        if (y[i] * x[0] != y[0] * x[i]) {
          failure = "all-zero z without a common ratio";
          break;
        }
      }
      if (failure.empty() && !classified.common_ratio.has_value()) {
        failure = "all-zero z without common_ratio set";
      }
    }
    if (!failure.empty()) {
      Violation violation;
      violation.digest = {pair_seed, len, 0, config.magnitude_bits};
      for (const BigInt& v : x) violation.a.push_back(v.str());
      for (const BigInt& v : y) violation.b.push_back(v.str());
      violation.info = failure;
      record(property, std::move(violation));
    }
  }
  return property;
}

CorpusSweepOutcome sweep_corpus(const SweepConfig& config) {
  CorpusSweepOutcome outcome;
  outcome.intersection.name = "minimizer_intersection";
  outcome.pair_exactness.name = "pair_exactness";
  outcome.dinkelbach_agreement.name = "dinkelbach_agreement";
  outcome.reduced_agreement.name = "reduced_agreement";
  outcome.reduced_agreement.note =
      "findings count brute minimizers disjoint from the greedy set";
  outcome.reduced_count.name = "reduced_count";
  if (config.trials <= 0 || config.max_N < 3) return outcome;

  auto skip_all = [&] {
    ++outcome.intersection.skipped;
    ++outcome.pair_exactness.skipped;
    ++outcome.dinkelbach_agreement.skipped;
    ++outcome.reduced_agreement.skipped;
    ++outcome.reduced_count.skipped;
  };

  SplitMix64 master(config.seed ^ 0x636f7270ull);
  for (long long trial = 0; trial < config.trials; ++trial) {
    const int N = static_cast<int>(master.next_in(3, config.max_N));
    const std::uint64_t instance_seed = master.next();
    const auto inst = random_instance(instance_seed, N, config.magnitude_bits);

    for (int n = 2; n < N; ++n) {
      const InstanceDigest digest{instance_seed, N, n, config.magnitude_bits};
      const auto counts = search_space_counts(N, n);
      if (counts.full > config.cap) {
        skip_all();
        continue;
      }

      const auto greedy = greedy_select(inst, n);
      const auto brute = brute_force_min(inst, n, config.cap);

      for (const auto& verdict :
           intersection_verdicts(inst, greedy, brute, digest)) {
        ++outcome.intersection.checked;
        if (!verdict.passes()) {
          record(outcome.intersection,
                 make_violation(digest, inst,
                                verdict.hypothesis_unequal_ratios
                                    ? "unequal-ratio minimizer disjoint from "
                                      "the greedy set"
                                    : "all-equal-ratio case with inexact "
                                      "greedy value"));
        }
      }

      if (n == 2) {
        ++outcome.pair_exactness.checked;
        if (!ratio_equal(greedy.selection.value, brute.value)) {
          record(outcome.pair_exactness,
                 make_violation(digest, inst, "n = 2 greedy not optimal"));
        }
      }

      const auto dinkelbach = dinkelbach_min(inst, n);
      ++outcome.dinkelbach_agreement.checked;
      bool lambdas_decreasing = true;
      for (std::size_t k = 0; k + 1 < dinkelbach.lambdas.size(); ++k) {
        if (compare_ratios(dinkelbach.lambdas[k + 1], dinkelbach.lambdas[k]) !=
            std::strong_ordering::less) {
          lambdas_decreasing = false;
        }
      }
      if (!ratio_equal(dinkelbach.result.value, brute.value)) {
        record(outcome.dinkelbach_agreement,
               make_violation(digest, inst, "dinkelbach value differs"));
      } else if (!lambdas_decreasing) {
        record(outcome.dinkelbach_agreement,
               make_violation(digest, inst, "lambda sequence not decreasing"));
      }

      const auto reduced =
          reduced_search_min(inst, n, greedy.selection.indices, config.cap);
      ++outcome.reduced_agreement.checked;
      if (!ratio_equal(reduced.value, brute.value)) {
        record(outcome.reduced_agreement,
               make_violation(digest, inst, "reduced-search value differs"));
      }
      std::vector<char> in_greedy(N, 0);
      for (int idx : greedy.selection.indices) in_greedy[idx - 1] = 1;
      for (const auto& minimizer : brute.minimizers) {
        const bool intersects =
            std::any_of(minimizer.begin(), minimizer.end(),
                        [&](int idx) { return in_greedy[idx - 1] != 0; });
        if (!intersects) ++outcome.reduced_agreement.findings;
      }

      ++outcome.reduced_count.checked;
      const BigInt expected = counts.reduced;
      if (BigInt(reduced.enumerated) != expected ||
          BigInt(reduced.enumerated) + binomial(N - n, n) !=
              BigInt(brute.enumerated)) {
        record(outcome.reduced_count,
               make_violation(digest, inst,
                              "enumerated " + std::to_string(reduced.enumerated) +
                                  ", expected " + expected.str()));
      }
    }
  }
  return outcome;
}

PropertyResult control_greedy_inexact() {
  PropertyResult property;
  property.name = "inexactness_control";
  property.note = "fixed instance where greedy must be strictly suboptimal";

  const auto inst = validate_instance<BigInt>({1, 3, 6, 4}, {10, 3, 12, 6});
  const auto greedy = greedy_select(inst, 3);
  const auto brute = brute_force_min(inst, 3);
  ++property.checked;
  if (compare_ratios(greedy.selection.value, brute.value) !=
      std::strong_ordering::greater) {
    record(property,
           make_violation({}, inst,
                          "greedy value not strictly above the optimum"));
  }
  return property;
}

VerificationReport run_verification(const SweepConfig& config) {
  VerificationReport report;
  report.config = config;
  report.properties.push_back(sweep_monotone_trace(config));
  report.properties.push_back(sweep_z_array(config));
  auto corpus = sweep_corpus(config);
  report.properties.push_back(std::move(corpus.intersection));
  report.properties.push_back(std::move(corpus.pair_exactness));
  report.properties.push_back(std::move(corpus.dinkelbach_agreement));
  report.properties.push_back(std::move(corpus.reduced_agreement));
  report.properties.push_back(std::move(corpus.reduced_count));
  if (config.trials > 0) {
    report.properties.push_back(control_greedy_inexact());
  }
  return report;
}

}  // namespace ratiomin

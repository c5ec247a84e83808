#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ratiomin/errors.hpp"
#include "ratiomin/oracles.hpp"
#include "ratiomin/theory.hpp"

namespace ratiomin {

/// Ratios are serialized as decimal strings (JSON numbers cannot carry big
/// integers losslessly) plus a binary64 convenience value. Indices are
/// 1-based everywhere. timing fields are excluded from any determinism
/// guarantee.

struct SolveArgs {
  std::string input;
  int n = 0;
  std::string mode = "greedy";        // greedy | brute | reduced | dinkelbach
  std::string arithmetic = "exact";   // exact | float (float: greedy only)
  unsigned long long cap = kDefaultEnumerationCap;
};

nlohmann::json run_solve(const SolveArgs& args);

struct VerifyArgs {
  long long trials = 2000;
  int max_N = 12;
  int magnitude_bits = 8;
  std::uint64_t seed = 0;
  unsigned long long cap = kDefaultEnumerationCap;
};

nlohmann::json run_verify(const VerifyArgs& args);

nlohmann::json to_json(const VerificationReport& report);

struct BenchArgs {
  std::vector<long long> sizes;
  int n = 0;
  int repeats = 5;
  std::string arithmetic = "float";  // float: greedy only; exact adds oracles
  std::uint64_t seed = 0;
  int magnitude_bits = 20;
  unsigned long long cap = kDefaultEnumerationCap;
};

struct BenchOutput {
  nlohmann::json report;
  std::string table;  // aligned text rendering of the same rows
};

BenchOutput run_bench(const BenchArgs& args);

struct GappyArgs {
  std::string u_path;
  std::string uhat_path;
  int n = 0;
};

nlohmann::json run_gappy(const GappyArgs& args);

/// {"error": {"code", "message", and "index"/"where" when set}}
nlohmann::json error_object(const Error& error);

}  // namespace ratiomin

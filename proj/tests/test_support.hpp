#pragma once

#include <unistd.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratiomin/instance.hpp"

namespace testsupport {

inline ratiomin::ProblemInstance make_instance(std::vector<long long> a,
                                               std::vector<long long> b) {
  std::vector<ratiomin::BigInt> ab(a.begin(), a.end());
  std::vector<ratiomin::BigInt> bb(b.begin(), b.end());
  return ratiomin::validate_instance(std::move(ab), std::move(bb));
}

// Ground truth kept deliberately separate from the library: bitmask
// enumeration instead of lexicographic successors, and reduced rational
// comparison instead of cross-multiplication.
struct NaiveResult {
  std::vector<std::vector<int>> minimizers;  // ascending sets, sorted list
  boost::multiprecision::cpp_rational value;
  unsigned long long examined = 0;
};

inline NaiveResult naive_min(const std::vector<long long>& a,
                             const std::vector<long long>& b, int n) {
  using boost::multiprecision::cpp_rational;
  const int N = static_cast<int>(a.size());
  NaiveResult result;
  bool have = false;
  for (std::uint64_t mask = 1; mask < (1ull << N); ++mask) {
    if (std::popcount(mask) != n) continue;
    ++result.examined;
    long long sum_a = 0, sum_b = 0;
    std::vector<int> set;
    for (int i = 0; i < N; ++i) {
      if (mask & (1ull << i)) {
        sum_a += a[i];
        sum_b += b[i];
        set.push_back(i + 1);
      }
    }
    const cpp_rational value(sum_a, sum_b);
    if (!have || value < result.value) {
      have = true;
      result.value = value;
      result.minimizers.clear();
      result.minimizers.push_back(std::move(set));
    } else if (value == result.value) {
      result.minimizers.push_back(std::move(set));
    }
  }
  std::sort(result.minimizers.begin(), result.minimizers.end());
  return result;
}

inline boost::multiprecision::cpp_rational to_rational(
    const ratiomin::ExactRatio& ratio) {
  return boost::multiprecision::cpp_rational(ratio.num, ratio.den);
}

// Scratch directory wiped on destruction.
class TempDir {
 public:
  TempDir() {
    static int counter = 0;
    path_ = std::filesystem::temp_directory_path() /
            ("ratiomin_test_" + std::to_string(::getpid()) + "_" +
             std::to_string(counter++));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name, const std::string& content) const {
    const auto full = path_ / name;
    std::ofstream out(full, std::ios::binary);
    out << content;
    return full.string();
  }

  std::string path(const std::string& name) const {
    return (path_ / name).string();
  }

 private:
  std::filesystem::path path_;
};

}  // namespace testsupport

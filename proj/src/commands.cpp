#include "ratiomin/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <utility>

#include "ratiomin/gappy.hpp"
#include "ratiomin/io.hpp"
#include "ratiomin/rng.hpp"

namespace ratiomin {

namespace {

using nlohmann::json;

struct Timer {
  std::chrono::steady_clock::time_point start =
      std::chrono::steady_clock::now();

  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string double_string(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

json ratio_json(const ExactRatio& ratio) {
  return json{{"num", ratio.num.str()},
              {"den", ratio.den.str()},
              {"value", ratio.num.convert_to<double>() /
                            ratio.den.convert_to<double>()}};
}

json ratio_json(const FloatRatio& ratio) {
  return json{{"num", double_string(ratio.num)},
              {"den", double_string(ratio.den)},
              {"value", ratio.num / ratio.den}};
}

template <class Scalar>
json trace_json(const BasicTrace<Scalar>& trace) {
  json steps = json::array();
  for (const auto& q : trace.q) {
    if constexpr (std::is_same_v<Scalar, double>) {
      steps.push_back({{"num", double_string(q.num)},
                       {"den", double_string(q.den)}});
    } else {
      steps.push_back({{"num", q.num.str()}, {"den", q.den.str()}});
    }
  }
  return steps;
}

json digest_json(const InstanceDigest& digest) {
  return json{{"seed", digest.seed},
              {"N", digest.N},
              {"n", digest.n},
              {"bits", digest.magnitude_bits}};
}

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  if (samples.size() % 2 == 1) return samples[mid];
  return 0.5 * (samples[mid - 1] + samples[mid]);
}

}  // namespace

nlohmann::json run_solve(const SolveArgs& args) {
  const bool known_mode = args.mode == "greedy" || args.mode == "brute" ||
                          args.mode == "reduced" || args.mode == "dinkelbach";
  if (!known_mode) {
    throw ConfigError("unknown mode '" + args.mode + "'");
  }
  if (args.arithmetic != "exact" && args.arithmetic != "float") {
    throw ConfigError("unknown arithmetic '" + args.arithmetic + "'");
  }
  if (args.arithmetic == "float" && args.mode != "greedy") {
    throw ConfigError("float arithmetic is only available for mode=greedy");
  }

  Timer timer;
  json report;
  report["mode"] = args.mode;
  report["arithmetic"] = args.arithmetic;
  report["n"] = args.n;

  if (args.arithmetic == "float") {
    const FloatInstance inst = load_instance_csv_float(args.input);
    const auto greedy = greedy_select(inst, args.n);
    report["indices"] = greedy.selection.indices;
    report["ratio"] = ratio_json(greedy.selection.value);
    report["trace"] = trace_json(greedy.trace);
    report["ties_encountered"] = greedy.trace.ties_encountered;
    report["timing_ms"] = timer.elapsed_ms();
    return report;
  }

  const ProblemInstance inst = load_instance_csv(args.input);
  if (args.mode == "greedy") {
    const auto greedy = greedy_select(inst, args.n);
    report["indices"] = greedy.selection.indices;
    report["ratio"] = ratio_json(greedy.selection.value);
    report["trace"] = trace_json(greedy.trace);
    report["ties_encountered"] = greedy.trace.ties_encountered;
  } else if (args.mode == "brute") {
    const auto result = brute_force_min(inst, args.n, args.cap);
    report["indices"] = result.minimizers.front();
    report["ratio"] = ratio_json(result.value);
    report["enumerated"] = result.enumerated;
  } else if (args.mode == "reduced") {
    const auto greedy = greedy_select(inst, args.n);
    const auto result =
        reduced_search_min(inst, args.n, greedy.selection.indices, args.cap);
    report["indices"] = result.minimizers.front();
    report["ratio"] = ratio_json(result.value);
    report["enumerated"] = result.enumerated;
    report["ties_encountered"] = greedy.trace.ties_encountered;
  } else {
    const auto outcome = dinkelbach_min(inst, args.n);
    report["indices"] = outcome.result.minimizers.front();
    report["ratio"] = ratio_json(outcome.result.value);
    report["enumerated"] = outcome.result.enumerated;
    report["iterations"] = outcome.iterations;
  }
  report["timing_ms"] = timer.elapsed_ms();
  return report;
}

nlohmann::json to_json(const VerificationReport& report) {
  json out;
  out["config"] = json{{"trials", report.config.trials},
                       {"max_N", report.config.max_N},
                       {"magnitude_bits", report.config.magnitude_bits},
                       {"seed", report.config.seed},
                       {"cap", report.config.cap}};
  json properties = json::array();
  for (const PropertyResult& property : report.properties) {
    json entry;
    entry["name"] = property.name;
    entry["checked"] = property.checked;
    entry["violations"] = property.violations;
    entry["skipped"] = property.skipped;
    entry["findings"] = property.findings;
    if (!property.note.empty()) entry["note"] = property.note;
    json details = json::array();
    for (const Violation& violation : property.details) {
      details.push_back(json{{"digest", digest_json(violation.digest)},
                             {"a", violation.a},
                             {"b", violation.b},
                             {"info", violation.info}});
    }
    entry["details"] = details;
    properties.push_back(std::move(entry));
  }
  out["properties"] = std::move(properties);
  out["all_passed"] = report.all_passed();
  return out;
}

nlohmann::json run_verify(const VerifyArgs& args) {
  if (args.trials < 0) throw ConfigError("trials must be >= 0");
  if (args.max_N < 2) throw ConfigError("max-N must be >= 2");
  if (args.magnitude_bits < 1 || args.magnitude_bits > 64) {
    throw ConfigError("magnitude-bits must be in [1, 64]");
  }
  SweepConfig config;
  config.trials = args.trials;
  config.max_N = args.max_N;
  config.magnitude_bits = args.magnitude_bits;
  config.seed = args.seed;
  config.cap = args.cap;
  return to_json(run_verification(config));
}

BenchOutput run_bench(const BenchArgs& args) {
  if (args.sizes.empty()) throw ConfigError("need at least one size");
  if (!std::is_sorted(args.sizes.begin(), args.sizes.end()) ||
      std::adjacent_find(args.sizes.begin(), args.sizes.end()) !=
          args.sizes.end()) {
    throw ConfigError("sizes must be strictly ascending");
  }
  if (args.sizes.front() < 2) throw ConfigError("sizes must be >= 2");
  if (args.sizes.back() > 100'000'000) {
    throw ConfigError("sizes above 1e8 are not supported");
  }
  if (args.n < 1 || args.n >= args.sizes.front()) {
    throw ConfigError("n must satisfy 1 <= n < smallest size");
  }
  if (args.repeats < 1) throw ConfigError("repeats must be >= 1");
  if (args.arithmetic != "exact" && args.arithmetic != "float") {
    throw ConfigError("unknown arithmetic '" + args.arithmetic + "'");
  }

  json rows = json::array();
  std::ostringstream table;
  char line[160];
  std::snprintf(line, sizeof line, "%10s  %-12s  %12s  %10s  %12s\n", "N",
                "solver", "median_ms", "x_prev", "enumerated");
  table << line;

  // per solver: index of the last size it ran at, and its median there
  std::map<std::string, std::pair<std::size_t, double>> previous_median;

  SplitMix64 master(args.seed);
  for (std::size_t size_index = 0; size_index < args.sizes.size();
       ++size_index) {
    const int N = static_cast<int>(args.sizes[size_index]);
    const std::uint64_t instance_seed = master.next();
    const ProblemInstance exact =
        random_instance(instance_seed, N, args.magnitude_bits);
    FloatInstance floating;
    if (args.arithmetic == "float") floating = to_float(exact);

    std::vector<std::string> solvers = {"greedy"};
    const bool oracles_fit =
        args.arithmetic == "exact" && binomial(N, args.n) <= args.cap;
    if (oracles_fit) {
      solvers.insert(solvers.end(), {"brute", "reduced", "dinkelbach"});
    }
    std::vector<int> greedy_set;
    if (oracles_fit) {
      greedy_set = greedy_select(exact, args.n).selection.indices;
    }

    for (const std::string& solver : solvers) {
      unsigned long long enumerated = 0;
      auto run_once = [&]() {
        if (solver == "greedy") {
          if (args.arithmetic == "float") {
            greedy_select(floating, args.n);
          } else {
            greedy_select(exact, args.n);
          }
        } else if (solver == "brute") {
          enumerated = brute_force_min(exact, args.n, args.cap).enumerated;
        } else if (solver == "reduced") {
          enumerated =
              reduced_search_min(exact, args.n, greedy_set, args.cap).enumerated;
        } else {
          enumerated = dinkelbach_min(exact, args.n).result.enumerated;
        }
      };

      run_once();  // warmup
      std::vector<double> samples;
      samples.reserve(args.repeats);
      for (int r = 0; r < args.repeats; ++r) {
        Timer timer;
        run_once();
        samples.push_back(timer.elapsed_ms());
      }
      const double median_ms = median(std::move(samples));

      json row;
      row["N"] = N;
      row["solver"] = solver;
      row["arithmetic"] = args.arithmetic;
      row["median_ms"] = median_ms;
      row["repeats"] = args.repeats;
      if (solver != "greedy") row["enumerated"] = enumerated;
      std::string ratio_text = "-";
      if (auto it = previous_median.find(solver);
          it != previous_median.end() && it->second.first + 1 == size_index &&
          it->second.second > 0) {
        const double ratio = median_ms / it->second.second;
        row["ratio_vs_prev"] = ratio;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", ratio);
        ratio_text = buf;
      }
      previous_median[solver] = {size_index, median_ms};

      char enum_text[32] = "-";
      if (solver != "greedy") {
        std::snprintf(enum_text, sizeof enum_text, "%llu", enumerated);
      }
      std::snprintf(line, sizeof line, "%10d  %-12s  %12.3f  %10s  %12s\n", N,
                    solver.c_str(), median_ms, ratio_text.c_str(), enum_text);
      table << line;
      rows.push_back(std::move(row));
    }
  }

  BenchOutput output;
  output.report = json{{"config", json{{"sizes", args.sizes},
                                       {"n", args.n},
                                       {"repeats", args.repeats},
                                       {"arithmetic", args.arithmetic},
                                       {"seed", args.seed},
                                       {"magnitude_bits", args.magnitude_bits},
                                       {"cap", args.cap}}},
                       {"rows", std::move(rows)}};
  output.table = table.str();
  return output;
}

nlohmann::json run_gappy(const GappyArgs& args) {
  Timer timer;
  const std::vector<double> u = load_vector(args.u_path);
  const Matrix uhat = load_matrix(args.uhat_path);
  const GappySolution solution = gappy_solve(u, uhat, args.n);

  json report;
  report["n"] = args.n;
  report["selection"] = solution.selection.indices;
  report["lhs"] = solution.bound.lhs;
  report["rhs"] = solution.bound.rhs;
  report["rhs_squared"] = solution.bound.rhs_squared;
  report["selected_ratio"] = solution.bound.selected_ratio;
  report["identity_error"] = solution.bound.identity_error;
  report["ties_encountered"] = solution.trace.ties_encountered;
  report["timing_ms"] = timer.elapsed_ms();
  return report;
}

nlohmann::json error_object(const Error& error) {
  json detail;
  detail["code"] = errc_name(error.code());
  detail["message"] = error.what();
  if (error.index() >= 0) detail["index"] = error.index();
  if (!error.where().empty()) detail["where"] = error.where();
  return json{{"error", std::move(detail)}};
}

}  // namespace ratiomin

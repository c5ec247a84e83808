#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ratiomin/commands.hpp"

namespace {

using nlohmann::json;

// Reports go to --output when given, otherwise to stdout.
void write_report(const json& report, const std::string& output_path) {
  const std::string text = report.dump(2) + "\n";
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) {
    throw ratiomin::ConfigError("cannot open output path " + output_path);
  }
  out << text;
}

void print_error(const json& object) { std::cout << object.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Choose n of N indices minimizing the ratio of selected-element sums "
      "(sum a_i) / (sum b_i). Exact arithmetic solvers, property "
      "verification sweeps, benchmarks, and a basis-driven selection mode."};
  app.require_subcommand(1);

  ratiomin::SolveArgs solve_args;
  std::string solve_output;
  auto* solve = app.add_subcommand("solve", "Run one solver on a CSV instance");
  solve->add_option("--input", solve_args.input, "CSV file with header a,b")
      ->required();
  solve->add_option("--n", solve_args.n, "subset size")->required();
  solve->add_option("--mode", solve_args.mode,
                    "greedy | brute | reduced | dinkelbach")
      ->default_val("greedy");
  solve->add_option("--arithmetic", solve_args.arithmetic,
                    "exact | float (float: greedy only)")
      ->default_val("exact");
  solve->add_option("--cap", solve_args.cap, "enumeration cap")
      ->default_val(ratiomin::kDefaultEnumerationCap);
  solve->add_option("--output", solve_output, "report path (default stdout)");

  ratiomin::VerifyArgs verify_args;
  std::string verify_output;
  auto* verify =
      app.add_subcommand("verify", "Property sweeps over seeded instances");
  verify->add_option("--trials", verify_args.trials, "instances per sweep")
      ->default_val(2000);
  verify->add_option("--max-N", verify_args.max_N, "largest instance size")
      ->default_val(12);
  verify->add_option("--magnitude-bits", verify_args.magnitude_bits,
                     "element magnitude in bits")
      ->default_val(8);
  verify->add_option("--seed", verify_args.seed, "sweep seed")->default_val(0);
  verify->add_option("--cap", verify_args.cap, "enumeration cap")
      ->default_val(ratiomin::kDefaultEnumerationCap);
  verify->add_option("--output", verify_output, "report path (default stdout)");

  ratiomin::BenchArgs bench_args;
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "Timing harness on seeded instances");
  bench->add_option("--sizes", bench_args.sizes, "ascending sizes, e.g. 1e5,1e6")
      ->required()
      ->delimiter(',');
  bench->add_option("--n", bench_args.n, "subset size")->required();
  bench->add_option("--repeats", bench_args.repeats, "timed runs per solver")
      ->default_val(5);
  bench->add_option("--arithmetic", bench_args.arithmetic,
                    "float (greedy only) | exact (adds oracle solvers)")
      ->default_val("float");
  bench->add_option("--seed", bench_args.seed, "instance seed")->default_val(0);
  bench->add_option("--magnitude-bits", bench_args.magnitude_bits,
                    "element magnitude in bits")
      ->default_val(20);
  bench->add_option("--cap", bench_args.cap, "enumeration cap")
      ->default_val(ratiomin::kDefaultEnumerationCap);
  bench->add_option("--output", bench_output, "report path (default stdout)");

  ratiomin::GappyArgs gappy_args;
  std::string gappy_output;
  auto* gappy = app.add_subcommand(
      "gappy", "Selection for a unit vector and complement basis");
  gappy->add_option("--u", gappy_args.u_path, "single-column vector file")
      ->required();
  gappy->add_option("--uhat", gappy_args.uhat_path, "dense matrix file")
      ->required();
  gappy->add_option("--n", gappy_args.n, "subset size")->required();
  gappy->add_option("--output", gappy_output, "report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    std::cerr << e.what() << "\n";
    print_error(json{{"error", {{"code", "ArgumentError"},
                                {"message", e.what()}}}});
    return 2;
  }

  try {
    if (solve->parsed()) {
      write_report(ratiomin::run_solve(solve_args), solve_output);
    } else if (verify->parsed()) {
      const json report = ratiomin::run_verify(verify_args);
      write_report(report, verify_output);
      return report.at("all_passed").get<bool>() ? 0 : 1;
    } else if (bench->parsed()) {
      const auto output = ratiomin::run_bench(bench_args);
      write_report(output.report, bench_output);
      // keep the table out of the JSON stream
      (bench_output.empty() ? std::cerr : std::cout) << output.table;
    } else if (gappy->parsed()) {
      write_report(ratiomin::run_gappy(gappy_args), gappy_output);
    }
  } catch (const ratiomin::ConfigError& e) {
    print_error(json{{"error", {{"code", "ConfigError"},
                                {"message", e.what()}}}});
    return 2;
  } catch (const ratiomin::Error& e) {
    print_error(ratiomin::error_object(e));
    return 1;
  }
  return 0;
}

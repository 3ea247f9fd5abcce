// SPDX-License-Identifier: Apache-2.0
//
// bench: run the sorting comparison matrix, the capacity sweep, or the
// randomized verification suite.
//
// Exit codes: 0 success, 1 configuration error, 2 verification failure.
// BENCH_THREADS is reserved; timed runs are always single-threaded.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "listsort/bench.hpp"

namespace {

using namespace listsort;
using namespace listsort::bench;

constexpr int kConfigError = 1;
constexpr int kVerifyError = 2;

ProbePolicy parse_probe(const std::string& s) {
  if (s == "all") return ProbePolicy::all_runs;
  if (s == "newest") return ProbePolicy::newest_only;
  throw ConfigError("unknown probe policy '" + s + "' (expected all or newest)");
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open '" + path + "' for writing");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"List Sort benchmark harness"};
  app.require_subcommand(1);

  // run
  BenchConfig cfg;
  std::string format = "csv";
  std::string out_path;
  std::string analysis_path;
  std::string probe = "all";
  std::size_t capacity = 0;
  std::size_t max_n = 100000;
  bool counts = false;
  auto* run = app.add_subcommand("run", "Run the algorithm x pattern x size matrix");
  run->add_option("--algos", cfg.algorithms,
                  "listsort,bubble,selection,insertion,quick,mergearr,mergelist")
      ->delimiter(',')
      ->required();
  run->add_option("--patterns", cfg.patterns, "random,asc,desc,worst,chunks:<len>")
      ->delimiter(',')
      ->required();
  run->add_option("--sizes", cfg.sizes, "Element counts (default: 5000..500000 grid, see --max-n)")
      ->delimiter(',');
  run->add_option("--max-n", max_n, "Drop default-grid sizes above this")->capture_default_str();
  run->add_option("--trials", cfg.trials, "Trials per cell")->capture_default_str();
  run->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  run->add_option("--capacity", capacity, "Fixed list sort capacity L (>= 2)");
  run->add_option("--probe", probe, "List sort probing: all | newest")->capture_default_str();
  run->add_flag("--counts", counts, "Markdown cells show median comparisons, not ms");
  run->add_option("--format", format, "csv | markdown")->capture_default_str();
  run->add_option("--out", out_path, "Output file (default stdout)");
  run->add_option("--analysis", analysis_path, "Also write prediction ratio records here");

  // sweep
  std::size_t sweep_n = 100000;
  std::vector<std::size_t> capacities;
  std::string sweep_pattern = "random";
  std::uint64_t sweep_seed = 0;
  std::size_t sweep_trials = 1;
  std::string sweep_out;
  std::string sweep_probe = "all";
  auto* sweep = app.add_subcommand("sweep", "Run list sort over a range of capacities L");
  sweep->add_option("--n", sweep_n, "Element count")->capture_default_str();
  sweep->add_option("--capacities", capacities, "Capacities to try")->delimiter(',')->required();
  sweep->add_option("--pattern", sweep_pattern, "Input pattern")->capture_default_str();
  sweep->add_option("--seed", sweep_seed, "Base seed")->capture_default_str();
  sweep->add_option("--trials", sweep_trials, "Trials per capacity")->capture_default_str();
  sweep->add_option("--probe", sweep_probe, "List sort probing: all | newest")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output file (default stdout)");

  // verify
  std::size_t fuzz_cases = 10000;
  std::uint64_t fuzz_seed = 1;
  std::size_t fuzz_max_n = 512;
  auto* verify = app.add_subcommand("verify", "Randomized oracle-equivalence check of all sorts");
  verify->add_option("--fuzz", fuzz_cases, "Number of random cases")->capture_default_str();
  verify->add_option("--seed", fuzz_seed, "Seed")->capture_default_str();
  verify->add_option("--max-n", fuzz_max_n, "Largest case size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    if (*run) {
      if (cfg.sizes.empty())
        for (auto n : default_sizes())
          if (n <= max_n) cfg.sizes.push_back(n);
      if (run->count("--capacity") > 0) cfg.capacity = capacity;
      cfg.probe = parse_probe(probe);
      Format fmt;
      if (format == "csv")
        fmt = Format::csv;
      else if (format == "markdown" || format == "md")
        fmt = Format::markdown;
      else
        throw ConfigError("unknown format '" + format + "' (expected csv or markdown)");

      const auto reports = run_matrix(cfg);
      write_output(out_path, emit_table(reports, fmt, counts ? Cell::comparisons : Cell::elapsed_ms));
      if (!analysis_path.empty()) write_output(analysis_path, analysis_csv(reports));
    } else if (*sweep) {
      const auto rows = sweep_capacity(sweep_n, capacities, sweep_pattern, sweep_seed,
                                       sweep_trials, parse_probe(sweep_probe));
      write_output(sweep_out, sweep_csv(rows));
    } else if (*verify) {
      const auto summary = fuzz(fuzz_cases, fuzz_seed, fuzz_max_n);
      for (const auto& m : summary.messages) std::cerr << "FAIL " << m << '\n';
      std::cout << summary.cases << " cases, " << summary.failures << " failures\n";
      if (summary.failures != 0) return kVerifyError;
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerifyError;
  }
  return 0;
}

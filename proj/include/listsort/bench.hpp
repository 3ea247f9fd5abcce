// SPDX-License-Identifier: Apache-2.0
#pragma once

// Benchmark harness: algorithm registry, the algorithm x pattern x size run
// matrix, table/CSV emission and the capacity sweep.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "listsort/analysis.hpp"
#include "listsort/baselines.hpp"
#include "listsort/core.hpp"
#include "listsort/datagen.hpp"
#include "listsort/list_sort.hpp"

namespace listsort::bench {

/// Bad configuration; the CLI maps it to exit code 1.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sort produced wrong output; the CLI maps it to exit code 2.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SortOutput {
  std::vector<Key> sorted;
  Metrics metrics;
};

using SortFn = std::function<SortOutput(std::span<const Key>, const ListSortOptions&)>;

struct Algorithm {
  std::string_view name;
  SortFn run;
  bool stable;
};

inline const std::vector<Algorithm>& algorithms() {
  auto wrap = [](auto fn) {
    return [fn](std::span<const Key> in, const ListSortOptions&) {
      auto r = fn(in);
      return SortOutput{std::move(r.sorted), r.metrics};
    };
  };
  static const std::vector<Algorithm> registry = {
      {"listsort",
       [](std::span<const Key> in, const ListSortOptions& o) {
         auto r = list_sort(in, o);
         return SortOutput{std::move(r.sorted), r.metrics};
       },
       true},
      {"bubble", wrap(bubble_sort), true},
      {"selection", wrap(selection_sort), false},
      {"insertion", wrap(insertion_sort), true},
      {"quick", wrap(quick_sort), false},
      {"mergearr", wrap(merge_sort_array), true},
      {"mergelist", wrap(merge_sort_linked), true},
  };
  return registry;
}

inline const Algorithm* find_algorithm(std::string_view name) {
  for (const auto& a : algorithms())
    if (a.name == name) return &a;
  return nullptr;
}

/// Union of the table rows used in the original comparison study.
inline const std::vector<std::size_t>& default_sizes() {
  static const std::vector<std::size_t> sizes = {5000,   10000,  20000,  30000,
                                                 40000,  50000,  100000, 200000,
                                                 300000, 400000, 500000};
  return sizes;
}

struct BenchConfig {
  std::vector<std::string> algorithms;
  std::vector<std::string> patterns;
  std::vector<std::size_t> sizes;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::size_t> capacity;
  ProbePolicy probe = ProbePolicy::all_runs;
};

/// Throws ConfigError on the first problem found.
inline void validate(const BenchConfig& cfg) {
  if (cfg.algorithms.empty()) throw ConfigError("no algorithms given");
  for (const auto& a : cfg.algorithms)
    if (!find_algorithm(a)) throw ConfigError("unknown algorithm '" + a + "'");
  if (cfg.patterns.empty()) throw ConfigError("no patterns given");
  for (const auto& p : cfg.patterns) {
    try {
      parse_pattern(p);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (cfg.sizes.empty()) throw ConfigError("no sizes given");
  if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
  if (cfg.capacity && *cfg.capacity < 2) throw ConfigError("capacity must be at least 2");
}

/// Seed of one matrix cell trial.
constexpr std::uint64_t cell_seed(std::uint64_t base_seed, std::size_t trial, std::size_t n) {
  return base_seed ^ mix64((static_cast<std::uint64_t>(trial) << 32) ^ n);
}

/// Lower median: element (k-1)/2 of the sorted values.
template <class T>
T lower_median(std::vector<T> values) {
  if (values.empty()) throw std::invalid_argument("median of nothing");
  const auto mid = values.begin() + static_cast<std::ptrdiff_t>((values.size() - 1) / 2);
  std::nth_element(values.begin(), mid, values.end());
  return *mid;
}

struct Timed {
  SortOutput output;
  std::uint64_t elapsed_ns;
};

inline Timed time_sort(const Algorithm& algo, std::span<const Key> input,
                       const ListSortOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  SortOutput out = algo.run(input, options);
  const auto stop = std::chrono::steady_clock::now();
  return {std::move(out), static_cast<std::uint64_t>(
                              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start)
                                  .count())};
}

/// Runs every (algorithm, pattern, n, trial) cell sequentially. Only the sort
/// call is timed; every output is verified afterwards. The report holding the
/// median elapsed time of each cell gets `median_of_trials` set.
inline std::vector<SortReport> run_matrix(const BenchConfig& cfg) {
  validate(cfg);
  std::vector<SortReport> reports;
  ListSortOptions options;
  options.capacity = cfg.capacity;
  options.probe = cfg.probe;

  for (const auto& algo_name : cfg.algorithms) {
    const Algorithm& algo = *find_algorithm(algo_name);
    for (const auto& pattern_str : cfg.patterns) {
      for (const std::size_t n : cfg.sizes) {
        const std::size_t first = reports.size();
        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
          const std::uint64_t seed = cell_seed(cfg.seed, trial, n);
          const std::vector<Key> input = generate(parse_pattern(pattern_str, seed), n);
          Timed t = time_sort(algo, input, options);
          if (auto v = verify_sorted(input, t.output.sorted)) {
            throw VerificationError(std::string(algo.name) + " on " + pattern_str + " n=" +
                                    std::to_string(n) + " seed=" + std::to_string(seed) + ": " +
                                    v->message);
          }
          reports.push_back(SortReport{std::string(algo.name), pattern_str, n, seed, trial,
                                       t.elapsed_ns, t.output.metrics, false});
        }
        std::vector<std::size_t> order(reports.size() - first);
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = first + i;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
          return reports[a].elapsed_ns < reports[b].elapsed_ns;
        });
        reports[order[(order.size() - 1) / 2]].median_of_trials = true;
      }
    }
  }
  return reports;
}

enum class Format { csv, markdown };
enum class Cell { elapsed_ms, comparisons };

inline constexpr std::string_view csv_header =
    "algo,pattern,n,seed,trial,elapsed_ns,comparisons,relinks,runs_created,merges,capacity_used";

inline std::string to_csv(const std::vector<SortReport>& reports) {
  std::ostringstream out;
  out << csv_header << '\n';
  for (const auto& r : reports) {
    out << r.algorithm << ',' << r.pattern << ',' << r.n << ',' << r.seed << ',' << r.trial << ','
        << r.elapsed_ns << ',' << r.metrics.comparisons << ',' << r.metrics.relinks << ','
        << r.metrics.runs_created << ',' << r.metrics.merges << ',' << r.metrics.capacity_used
        << '\n';
  }
  return out.str();
}

/// Parses text produced by to_csv. Throws std::invalid_argument on a bad header or row.
inline std::vector<SortReport> parse_csv(std::string_view text) {
  std::vector<SortReport> reports;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != csv_header)
    throw std::invalid_argument("unexpected CSV header");
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream row(line);
    for (std::string cell; std::getline(row, cell, ',');) f.push_back(cell);
    if (f.size() != 11)
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": expected 11 fields");
    try {
      SortReport r;
      r.algorithm = f[0];
      r.pattern = f[1];
      r.n = std::stoull(f[2]);
      r.seed = std::stoull(f[3]);
      r.trial = std::stoull(f[4]);
      r.elapsed_ns = std::stoull(f[5]);
      r.metrics = Metrics{std::stoull(f[6]), std::stoull(f[7]), std::stoull(f[8]),
                          std::stoull(f[9]), std::stoull(f[10])};
      reports.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("CSV line " + std::to_string(line_no) + ": bad number");
    }
  }
  return reports;
}

/// Pivoted medians: pattern -> n -> algorithm -> median cell value.
/// Elapsed values are nanoseconds; rendering converts to milliseconds.
struct Pivot {
  std::vector<std::string> patterns;    // first-appearance order
  std::vector<std::string> algorithms;  // first-appearance order
  std::map<std::string, std::map<std::size_t, std::map<std::string, std::uint64_t>>> cells;

  friend bool operator==(const Pivot&, const Pivot&) = default;
};

inline Pivot pivot(const std::vector<SortReport>& reports, Cell cell) {
  Pivot p;
  std::map<std::string, std::map<std::size_t, std::map<std::string, std::vector<std::uint64_t>>>>
      samples;
  auto note = [](std::vector<std::string>& seen, const std::string& s) {
    if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
  };
  for (const auto& r : reports) {
    note(p.patterns, r.pattern);
    note(p.algorithms, r.algorithm);
    samples[r.pattern][r.n][r.algorithm].push_back(
        cell == Cell::elapsed_ms ? r.elapsed_ns : r.metrics.comparisons);
  }
  for (auto& [pat, by_n] : samples)
    for (auto& [n, by_algo] : by_n)
      for (auto& [algo, values] : by_algo) p.cells[pat][n][algo] = lower_median(values);
  return p;
}

inline std::string render_markdown(const Pivot& p, Cell cell) {
  std::ostringstream out;
  const bool headings = p.patterns.size() > 1;
  for (const auto& pat : p.patterns) {
    if (headings) out << "### " << pat << "\n\n";
    out << "| n |";
    for (const auto& a : p.algorithms) out << ' ' << a << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < p.algorithms.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& [n, by_algo] : p.cells.at(pat)) {
      out << "| " << n << " |";
      for (const auto& a : p.algorithms) {
        const auto it = by_algo.find(a);
        if (it == by_algo.end()) {
          out << " - |";
        } else if (cell == Cell::elapsed_ms) {
          out << ' ' << std::fixed << std::setprecision(2)
              << static_cast<double>(it->second) / 1e6 << " |";
        } else {
          out << ' ' << it->second << " |";
        }
      }
      out << '\n';
    }
    if (headings) out << '\n';
  }
  return out.str();
}

/// CSV emits every report row; markdown emits the pivoted medians.
inline std::string emit_table(const std::vector<SortReport>& reports, Format format,
                              Cell cell = Cell::elapsed_ms) {
  if (reports.empty()) throw std::invalid_argument("no reports to emit");
  if (format == Format::csv) return to_csv(reports);
  return render_markdown(pivot(reports, cell), cell);
}

inline constexpr std::string_view analysis_csv_header =
    "algo,pattern,n,seed,trial,capacity_used,runs_created,regime,predicted,measured,ratio";

/// Ratio records for the list sort reports among `reports`.
inline std::string analysis_csv(const std::vector<SortReport>& reports) {
  std::ostringstream out;
  out << analysis_csv_header << '\n';
  for (const auto& r : reports) {
    if (r.algorithm != "listsort" || r.metrics.capacity_used < 2) continue;
    const auto pred = predict(r.n, std::max<std::uint64_t>(r.metrics.runs_created, 1),
                              r.metrics.capacity_used);
    const auto rec = compare_prediction(r, pred);
    out << r.algorithm << ',' << r.pattern << ',' << r.n << ',' << r.seed << ',' << r.trial << ','
        << r.metrics.capacity_used << ',' << r.metrics.runs_created << ','
        << regime_name(rec.regime) << ',' << round_sig3(rec.predicted) << ','
        << static_cast<std::uint64_t>(rec.measured) << ',' << std::setprecision(4) << rec.ratio
        << std::setprecision(6) << '\n';
  }
  return out.str();
}

struct SweepRow {
  std::size_t capacity;
  std::uint64_t median_elapsed_ns;
  std::uint64_t median_comparisons;
};

/// List sort over one input per trial, once for every capacity in `capacities`.
inline std::vector<SweepRow> sweep_capacity(std::size_t n, const std::vector<std::size_t>& capacities,
                                            const std::string& pattern_str, std::uint64_t seed,
                                            std::size_t trials,
                                            ProbePolicy probe = ProbePolicy::all_runs) {
  if (capacities.empty()) throw ConfigError("no capacities given");
  for (auto c : capacities)
    if (c < 2) throw ConfigError("capacity must be at least 2, got " + std::to_string(c));
  if (trials < 1) throw ConfigError("trials must be at least 1");
  try {
    parse_pattern(pattern_str);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  const Algorithm& algo = *find_algorithm("listsort");
  std::vector<std::vector<Key>> inputs;
  for (std::size_t t = 0; t < trials; ++t)
    inputs.push_back(generate(parse_pattern(pattern_str, cell_seed(seed, t, n)), n));

  std::vector<SweepRow> rows;
  for (const std::size_t cap : capacities) {
    ListSortOptions options;
    options.capacity = cap;
    options.probe = probe;
    std::vector<std::uint64_t> elapsed, comparisons;
    for (const auto& input : inputs) {
      Timed t = time_sort(algo, input, options);
      if (auto v = verify_sorted(input, t.output.sorted))
        throw VerificationError("listsort L=" + std::to_string(cap) + ": " + v->message);
      elapsed.push_back(t.elapsed_ns);
      comparisons.push_back(t.output.metrics.comparisons);
    }
    rows.push_back({cap, lower_median(elapsed), lower_median(comparisons)});
  }
  return rows;
}

inline std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "capacity,median_elapsed_ns,median_comparisons\n";
  for (const auto& r : rows)
    out << r.capacity << ',' << r.median_elapsed_ns << ',' << r.median_comparisons << '\n';
  return out.str();
}

struct FuzzSummary {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures
};

/// Randomized oracle-equivalence check of every registered sort, plus list
/// sort with the smaller-into-bigger merge disabled and with newest-only
/// probing. Values must match std::sort; stable sorts must also match the
/// tag order of std::stable_sort. Sizes 0..max_n, duplicate density varies.
inline FuzzSummary fuzz(std::size_t cases, std::uint64_t seed, std::size_t max_n = 512) {
  FuzzSummary summary;
  SplitMix64 rng(seed);
  auto by_value = [](const Key& a, const Key& b) { return a.value < b.value; };

  struct Variant {
    std::string name;
    const Algorithm* algo;
    ListSortOptions options;
  };
  std::vector<Variant> variants;
  for (const auto& a : algorithms()) variants.push_back({std::string(a.name), &a, {}});
  ListSortOptions no_opt;
  no_opt.smaller_into_bigger = false;
  variants.push_back({"listsort(no-opt)", find_algorithm("listsort"), no_opt});
  ListSortOptions newest;
  newest.probe = ProbePolicy::newest_only;
  variants.push_back({"listsort(newest)", find_algorithm("listsort"), newest});

  auto fail = [&](std::string msg) {
    ++summary.failures;
    if (summary.messages.size() < 10) summary.messages.push_back(std::move(msg));
  };

  for (std::size_t c = 0; c < cases; ++c) {
    const std::size_t n = rng() % (max_n + 1);
    const std::uint64_t ranges[] = {std::uint64_t{1} << 31, n / 4 + 1, 4};
    const std::uint64_t range = ranges[rng() % 3];
    std::vector<std::int64_t> values(n);
    for (auto& v : values) v = static_cast<std::int64_t>(rng() % range);
    const std::vector<Key> input = make_keys(values);

    std::vector<Key> expect = input;
    std::stable_sort(expect.begin(), expect.end(), by_value);
    const auto expect_values = values_of(expect);
    const auto expect_tags = tags_of(expect);

    for (const auto& v : variants) {
      const SortOutput out = v.algo->run(input, v.options);
      const std::string where = v.name + " case " + std::to_string(c) + " n=" + std::to_string(n);
      if (auto bad = verify_sorted(input, out.sorted)) {
        fail(where + ": " + bad->message);
      } else if (values_of(out.sorted) != expect_values) {
        fail(where + ": values differ from reference");
      } else if (v.algo->stable && tags_of(out.sorted) != expect_tags) {
        fail(where + ": unstable order of equal keys");
      }
    }
    ++summary.cases;
  }
  return summary;
}

}  // namespace listsort::bench

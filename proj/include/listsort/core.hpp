// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace listsort {

/// Sort key. Ordering looks at `value` only; `tag` records the original
/// input position so stability can be observed after sorting.
struct Key {
  std::int64_t value = 0;
  std::uint32_t tag = 0;

  friend bool operator==(const Key&, const Key&) = default;
};

/// Operation counters for one sort invocation.
struct Metrics {
  std::uint64_t comparisons = 0;
  std::uint64_t relinks = 0;       // node splices (linked) or element moves (arrays)
  std::uint64_t runs_created = 0;  // T
  std::uint64_t merges = 0;
  std::uint64_t capacity_used = 0; // L, list sort only

  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// One benchmark observation. `elapsed_ns` covers the sort call alone.
struct SortReport {
  std::string algorithm;
  std::string pattern;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  std::uint64_t elapsed_ns = 0;
  Metrics metrics;
  bool median_of_trials = false;
};

/// The single comparison channel every sort goes through.
inline std::strong_ordering counting_compare(const Key& a, const Key& b,
                                             Metrics& m) noexcept {
  ++m.comparisons;
  return a.value <=> b.value;
}

inline bool counted_less(const Key& a, const Key& b, Metrics& m) noexcept {
  return counting_compare(a, b, m) < 0;
}

/// Builds keys from raw values, tagging each with its position.
inline std::vector<Key> make_keys(std::span<const std::int64_t> values) {
  std::vector<Key> keys;
  keys.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    keys.push_back(Key{values[i], static_cast<std::uint32_t>(i)});
  return keys;
}

inline std::vector<Key> make_keys(std::initializer_list<std::int64_t> values) {
  return make_keys(std::span<const std::int64_t>(values.begin(), values.size()));
}

inline std::vector<std::int64_t> values_of(std::span<const Key> keys) {
  std::vector<std::int64_t> out;
  out.reserve(keys.size());
  for (const Key& k : keys) out.push_back(k.value);
  return out;
}

inline std::vector<std::uint32_t> tags_of(std::span<const Key> keys) {
  std::vector<std::uint32_t> out;
  out.reserve(keys.size());
  for (const Key& k : keys) out.push_back(k.tag);
  return out;
}

struct Violation {
  enum class Kind { length_mismatch, unsorted, not_permutation };
  Kind kind;
  std::size_t index;  // output index for `unsorted`, position in sorted multiset otherwise
  std::string message;
};

/// Checks that `output` is non-decreasing by value and is a permutation of
/// `input` over (value, tag) pairs. Returns nullopt when both hold.
inline std::optional<Violation> verify_sorted(std::span<const Key> input,
                                              std::span<const Key> output) {
  if (input.size() != output.size()) {
    return Violation{Violation::Kind::length_mismatch,
                     std::min(input.size(), output.size()),
                     "length mismatch: input has " + std::to_string(input.size()) +
                         " keys, output has " + std::to_string(output.size())};
  }
  for (std::size_t i = 0; i + 1 < output.size(); ++i) {
    if (output[i + 1].value < output[i].value) {
      return Violation{Violation::Kind::unsorted, i,
                       "order violation at index " + std::to_string(i) + ": " +
                           std::to_string(output[i].value) + " > " +
                           std::to_string(output[i + 1].value)};
    }
  }

  auto by_value_tag = [](const Key& a, const Key& b) {
    return a.value != b.value ? a.value < b.value : a.tag < b.tag;
  };
  std::vector<Key> in(input.begin(), input.end());
  std::vector<Key> out(output.begin(), output.end());
  std::sort(in.begin(), in.end(), by_value_tag);
  std::sort(out.begin(), out.end(), by_value_tag);
  std::vector<Key> extra, missing;
  std::set_difference(out.begin(), out.end(), in.begin(), in.end(), std::back_inserter(extra),
                      by_value_tag);
  std::set_difference(in.begin(), in.end(), out.begin(), out.end(), std::back_inserter(missing),
                      by_value_tag);
  if (extra.empty() && missing.empty()) return std::nullopt;
  auto show = [](const Key& k) {
    return "(" + std::to_string(k.value) + ", tag " + std::to_string(k.tag) + ")";
  };
  std::string what = "multiset discrepancy:";
  if (!extra.empty()) what += " " + show(extra.front()) + " not in input";
  if (!extra.empty() && !missing.empty()) what += ";";
  if (!missing.empty()) what += " " + show(missing.front()) + " missing from output";
  const Key& first = extra.empty() ? missing.front() : extra.front();
  const auto at = std::lower_bound(out.begin(), out.end(), first, by_value_tag);
  return Violation{Violation::Kind::not_permutation, static_cast<std::size_t>(at - out.begin()),
                   std::move(what)};
  return std::nullopt;
}

}  // namespace listsort

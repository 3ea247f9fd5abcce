// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "listsort/core.hpp"

namespace listsort {

/// splitmix64: 64-bit state advanced by the golden-ratio increment, output
/// finalised by two xor-shift-multiply rounds. Streams are identical on every
/// platform for a given seed.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t operator()() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Next value in [0, 2^31).
  constexpr std::int64_t next_31() noexcept { return static_cast<std::int64_t>((*this)() >> 33); }

 private:
  std::uint64_t state_;
};

/// One-shot mix of a 64-bit word; the first output of a generator seeded with it.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept { return SplitMix64(x)(); }

namespace pattern {
struct Random {
  std::uint64_t seed = 0;
};
struct Ascending {};
struct Descending {};
struct WorstInterleave {};
struct SortedChunks {
  std::size_t chunk_len = 1;
  std::uint64_t seed = 0;
};
}  // namespace pattern

using Pattern = std::variant<pattern::Random, pattern::Ascending, pattern::Descending,
                             pattern::WorstInterleave, pattern::SortedChunks>;

inline std::vector<Key> generate(const Pattern& p, std::size_t n) {
  std::vector<std::int64_t> v;
  v.reserve(n);
  const auto sn = static_cast<std::int64_t>(n);

  if (const auto* r = std::get_if<pattern::Random>(&p)) {
    SplitMix64 rng(r->seed);
    for (std::size_t i = 0; i < n; ++i) v.push_back(rng.next_31());
  } else if (std::holds_alternative<pattern::Ascending>(p)) {
    for (std::int64_t i = 1; i <= sn; ++i) v.push_back(i);
  } else if (std::holds_alternative<pattern::Descending>(p)) {
    for (std::int64_t i = sn; i >= 1; --i) v.push_back(i);
  } else if (std::holds_alternative<pattern::WorstInterleave>(p)) {
    std::int64_t lo = 1, hi = sn;
    while (lo < hi) {
      v.push_back(lo++);
      v.push_back(hi--);
    }
    if (lo == hi) v.push_back(lo);
  } else {
    const auto& c = std::get<pattern::SortedChunks>(p);
    if (c.chunk_len == 0) throw std::invalid_argument("chunk length must be at least 1");
    SplitMix64 rng(c.seed);
    bool ascending = true;
    // Chunk bases are drawn from [0, n) so neighbouring chunks overlap in range.
    const std::uint64_t span = n == 0 ? 1 : n;
    for (std::size_t start = 0; start < n; start += c.chunk_len) {
      const std::size_t len = std::min(c.chunk_len, n - start);
      const auto base = static_cast<std::int64_t>(rng() % span);
      for (std::size_t i = 0; i < len; ++i) {
        const auto off = static_cast<std::int64_t>(ascending ? i : len - 1 - i);
        v.push_back(base + off);
      }
      ascending = !ascending;
    }
  }
  return make_keys(v);
}

/// CLI name: random, asc, desc, worst, chunks:<len>.
inline std::string pattern_name(const Pattern& p) {
  struct Namer {
    std::string operator()(const pattern::Random&) const { return "random"; }
    std::string operator()(const pattern::Ascending&) const { return "asc"; }
    std::string operator()(const pattern::Descending&) const { return "desc"; }
    std::string operator()(const pattern::WorstInterleave&) const { return "worst"; }
    std::string operator()(const pattern::SortedChunks& c) const {
      return "chunks:" + std::to_string(c.chunk_len);
    }
  };
  return std::visit(Namer{}, p);
}

/// Parses a CLI pattern name. Seeded patterns take `seed`.
/// Throws std::invalid_argument on an unknown name or a bad chunk length.
inline Pattern parse_pattern(std::string_view name, std::uint64_t seed = 0) {
  if (name == "random") return pattern::Random{seed};
  if (name == "asc") return pattern::Ascending{};
  if (name == "desc") return pattern::Descending{};
  if (name == "worst") return pattern::WorstInterleave{};
  constexpr std::string_view chunks = "chunks:";
  if (name.starts_with(chunks)) {
    const std::string digits(name.substr(chunks.size()));
    std::size_t pos = 0;
    unsigned long long len = 0;
    try {
      len = std::stoull(digits, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (digits.empty() || pos != digits.size() || len == 0 || digits.front() == '-')
      throw std::invalid_argument("bad chunk length in pattern '" + std::string(name) + "'");
    return pattern::SortedChunks{static_cast<std::size_t>(len), seed};
  }
  throw std::invalid_argument("unknown pattern '" + std::string(name) + "'");
}

/// Returns a copy of `p` re-seeded with `seed`; unseeded patterns are unchanged.
inline Pattern with_seed(Pattern p, std::uint64_t seed) {
  if (auto* r = std::get_if<pattern::Random>(&p)) r->seed = seed;
  if (auto* c = std::get_if<pattern::SortedChunks>(&p)) c->seed = seed;
  return p;
}

}  // namespace listsort

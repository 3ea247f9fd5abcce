// SPDX-License-Identifier: Apache-2.0
#pragma once

// List Sort: each element is prepended or appended to one of a bounded pool of
// sorted runs, or opens a new run. When the pool is full and an element fits
// nowhere, the pool collapses into one run by splice-merging from the last
// run back to the first.

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "listsort/core.hpp"

namespace listsort {

/// Maximum number of runs for an input of n elements.
///
/// Piecewise in tt = floor(n / 10000). Fractional slopes are evaluated in
/// integer arithmetic and rounded half-up; the result never drops below 2.
constexpr std::size_t list_capacity(std::size_t n) noexcept {
  const std::uint64_t tt = n / 10000;
  std::uint64_t cap = 0;
  if (tt == 0)
    cap = 15;
  else if (tt <= 10)
    cap = 5 * tt;
  else if (tt <= 50)
    cap = 50 + 3 * (tt - 10);
  else if (tt <= 100)
    cap = 170 + (tt - 50);
  else if (tt <= 500)
    cap = (22000 + 45 * (tt - 100) + 50) / 100;  // 220 + 0.45 (tt - 100)
  else if (tt <= 1000)
    cap = (40000 + 15 * (tt - 500) + 50) / 100;  // 400 + 0.15 (tt - 500)
  else if (tt <= 10000)
    cap = (475000 + 32 * (tt - 1000) + 500) / 1000;  // 475 + 0.032 (tt - 1000)
  else
    cap = 10000;
  return static_cast<std::size_t>(cap < 2 ? 2 : cap);
}

namespace detail {
inline constexpr std::uint32_t nil = std::numeric_limits<std::uint32_t>::max();
}

/// Storage cell of a run. Nodes live in one arena owned by the pool and are
/// linked by index, so merging rewires `next` and never moves a key.
struct Node {
  Key key;
  std::uint32_t next = detail::nil;
};

/// A sorted, singly linked, double-ended node sequence inside an arena.
struct Run {
  std::uint32_t head = detail::nil;
  std::uint32_t tail = detail::nil;
  std::size_t length = 0;
  std::size_t created_at = 0;  // 1-based creation ordinal within the pool

  bool empty() const noexcept { return length == 0; }
};

enum class Extend { prepended, appended, rejected };

/// Tries to place `node` at either end of `run`. Strictly below the head
/// prepends; at or above the tail appends. Uses at most two comparisons.
inline Extend try_extend(std::vector<Node>& arena, Run& run, std::uint32_t node,
                         Metrics& m) noexcept {
  assert(!run.empty());
  const Key& k = arena[node].key;
  if (counting_compare(k, arena[run.head].key, m) < 0) {
    arena[node].next = run.head;
    run.head = node;
    ++run.length;
    ++m.relinks;
    return Extend::prepended;
  }
  if (counting_compare(k, arena[run.tail].key, m) >= 0) {
    arena[node].next = detail::nil;
    arena[run.tail].next = node;
    run.tail = node;
    ++run.length;
    ++m.relinks;
    return Extend::appended;
  }
  return Extend::rejected;
}

/// Stable splice merge of two sorted runs, `earlier` created before `later`.
///
/// Equal keys keep the element of `earlier` first. With `smaller_into_bigger`
/// the nodes of the shorter run are threaded into the longer one; otherwise
/// `later` is always threaded into `earlier`. The output order is the same
/// either way, only comparison and relink counts differ.
inline Run merge_pair(std::vector<Node>& arena, const Run& earlier, const Run& later,
                      Metrics& m, bool smaller_into_bigger = true) {
  if (earlier.empty()) return Run{later.head, later.tail, later.length, earlier.created_at};
  if (later.empty()) return earlier;

  const bool base_is_earlier = !smaller_into_bigger || earlier.length >= later.length;
  const Run& base = base_is_earlier ? earlier : later;
  const Run& other = base_is_earlier ? later : earlier;

  Run out{base.head, base.tail, earlier.length + later.length, earlier.created_at};

  // A node from `other` goes before base node y when it is strictly smaller
  // (other is the later run) or smaller-or-equal (other is the earlier run).
  auto goes_before = [&](std::uint32_t x, std::uint32_t y) {
    const auto ord = counting_compare(arena[x].key, arena[y].key, m);
    return base_is_earlier ? ord < 0 : ord <= 0;
  };

  std::uint32_t prev = detail::nil;
  std::uint32_t cur = base.head;
  std::uint32_t x = other.head;
  while (x != detail::nil) {
    while (cur != detail::nil && !goes_before(x, cur)) {
      prev = cur;
      cur = arena[cur].next;
    }
    if (cur == detail::nil) {
      // base exhausted: the rest of `other` hangs off the base tail
      arena[prev].next = x;
      out.tail = other.tail;
      ++m.relinks;
      break;
    }
    const std::uint32_t x_next = arena[x].next;
    if (prev == detail::nil)
      out.head = x;
    else
      arena[prev].next = x;
    arena[x].next = cur;
    ++m.relinks;
    prev = x;
    x = x_next;
  }
  ++m.merges;
  return out;
}

/// Which runs an incoming key is offered to before a new run is opened.
enum class ProbePolicy {
  all_runs,     // every run, oldest first; the first run that accepts takes it
  newest_only,  // only the most recently created run
};

/// Options for a list sort invocation.
struct ListSortOptions {
  std::optional<std::size_t> capacity;  // overrides list_capacity(n) when set
  bool smaller_into_bigger = true;
  ProbePolicy probe = ProbePolicy::all_runs;
};

/// Bounded pool of runs plus the node arena they share.
class RunPool {
 public:
  RunPool(std::size_t capacity, std::size_t reserve_nodes, bool smaller_into_bigger = true,
          ProbePolicy probe = ProbePolicy::all_runs)
      : capacity_(capacity), smaller_into_bigger_(smaller_into_bigger), probe_(probe) {
    if (capacity < 2) throw std::invalid_argument("run pool capacity must be at least 2");
    arena_.reserve(reserve_nodes);
    runs_.reserve(capacity);
  }

  std::size_t capacity() const noexcept { return capacity_; }
  std::span<const Run> runs() const noexcept { return runs_; }
  const std::vector<Node>& arena() const noexcept { return arena_; }
  bool empty() const noexcept { return runs_.empty(); }

  /// Keys of `run` in order.
  std::vector<Key> keys(const Run& run) const {
    std::vector<Key> out;
    out.reserve(run.length);
    for (std::uint32_t i = run.head; i != detail::nil; i = arena_[i].next)
      out.push_back(arena_[i].key);
    return out;
  }

  /// Adds a run seeded with the given keys, which must already be sorted.
  /// Intended for tests and examples that need a specific pool shape.
  void push_run(std::span<const Key> sorted) {
    assert(!sorted.empty() && runs_.size() < capacity_);
    Run run{detail::nil, detail::nil, 0, runs_.size() + 1};
    for (const Key& k : sorted) {
      const auto idx = new_node(k);
      if (run.empty())
        run.head = idx;
      else
        arena_[run.tail].next = idx;
      run.tail = idx;
      ++run.length;
    }
    runs_.push_back(run);
  }

  /// Inserts one key: extend an existing run at either end, else open a new
  /// run, else collapse the full pool and retry against the merged run.
  ///
  /// With ProbePolicy::all_runs a key only reaches run j after runs 1..j-1
  /// rejected it, so every later run's range nests inside the earlier ones:
  /// heads are non-decreasing and tails strictly decreasing in creation order.
  template <class Observer>
  void insert(const Key& k, Metrics& m, Observer& observer) {
    const std::uint32_t idx = new_node(k);
    if (runs_.empty()) {
      seed_run(idx, m);
      return;
    }
    if (probe_ == ProbePolicy::all_runs) {
      for (Run& run : runs_)
        if (try_extend(arena_, run, idx, m) != Extend::rejected) return;
    } else if (try_extend(arena_, runs_.back(), idx, m) != Extend::rejected) {
      return;
    }
    if (runs_.size() == capacity_) {
      observer.before_merge_all(*this);
      merge_all(m);
      if (try_extend(arena_, runs_.back(), idx, m) != Extend::rejected) return;
    }
    seed_run(idx, m);
  }

  void insert(const Key& k, Metrics& m) {
    NullObserver none;
    insert(k, m, none);
  }

  /// Folds runs from last to first until one remains; it becomes run #1.
  void merge_all(Metrics& m) {
    if (runs_.empty()) return;
    while (runs_.size() > 1) {
      Run later = runs_.back();
      runs_.pop_back();
      runs_.back() = merge_pair(arena_, runs_.back(), later, m, smaller_into_bigger_);
    }
    runs_.front().created_at = 1;
  }

  struct NullObserver {
    void before_merge_all(const RunPool&) const noexcept {}
  };

 private:
  std::uint32_t new_node(const Key& k) {
    assert(arena_.size() < detail::nil);
    arena_.push_back(Node{k, detail::nil});
    return static_cast<std::uint32_t>(arena_.size() - 1);
  }

  void seed_run(std::uint32_t idx, Metrics& m) {
    runs_.push_back(Run{idx, idx, 1, runs_.size() + 1});
    ++m.runs_created;
  }

  std::size_t capacity_;
  bool smaller_into_bigger_;
  ProbePolicy probe_;
  std::vector<Node> arena_;
  std::vector<Run> runs_;
};

struct ListSortResult {
  std::vector<Key> sorted;
  Metrics metrics;
};

/// Sorts `input` with List Sort. `observer.before_merge_all(pool)` is called
/// each time a full pool is about to collapse during insertion.
template <class Observer>
ListSortResult list_sort(std::span<const Key> input, const ListSortOptions& options,
                         Observer& observer) {
  ListSortResult result;
  const std::size_t cap = options.capacity.value_or(list_capacity(input.size()));
  if (cap < 2) throw std::invalid_argument("list sort capacity must be at least 2");
  result.metrics.capacity_used = cap;
  if (input.size() < 2) {
    result.sorted.assign(input.begin(), input.end());
    result.metrics.runs_created = input.size();
    return result;
  }

  RunPool pool(cap, input.size(), options.smaller_into_bigger, options.probe);
  for (const Key& k : input) pool.insert(k, result.metrics, observer);
  if (pool.runs().size() > 1) pool.merge_all(result.metrics);
  result.sorted = pool.keys(pool.runs().front());
  return result;
}

inline ListSortResult list_sort(std::span<const Key> input,
                                const ListSortOptions& options = {}) {
  RunPool::NullObserver none;
  return list_sort(input, options, none);
}

}  // namespace listsort

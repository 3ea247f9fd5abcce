// SPDX-License-Identifier: Apache-2.0
#pragma once

// Reference comparison sorts, instrumented through counting_compare.
// Array sorts count element writes as relinks; the linked merge sort counts
// node splices.

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "listsort/core.hpp"

namespace listsort {

struct SortResult {
  std::vector<Key> sorted;
  Metrics metrics;
};

/// Adjacent-swap passes; stops after the first pass without a swap.
inline SortResult bubble_sort(std::span<const Key> input) {
  SortResult r{{input.begin(), input.end()}, {}};
  auto& a = r.sorted;
  for (std::size_t end = a.size(); end > 1; --end) {
    bool swapped = false;
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (counted_less(a[i + 1], a[i], r.metrics)) {
        std::swap(a[i], a[i + 1]);
        r.metrics.relinks += 2;
        swapped = true;
      }
    }
    if (!swapped) break;
  }
  return r;
}

/// Always n(n-1)/2 comparisons.
inline SortResult selection_sort(std::span<const Key> input) {
  SortResult r{{input.begin(), input.end()}, {}};
  auto& a = r.sorted;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    std::size_t min = i;
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (counted_less(a[j], a[min], r.metrics)) min = j;
    if (min != i) {
      std::swap(a[i], a[min]);
      r.metrics.relinks += 2;
    }
  }
  return r;
}

/// Stable; n-1 comparisons on sorted input.
inline SortResult insertion_sort(std::span<const Key> input) {
  SortResult r{{input.begin(), input.end()}, {}};
  auto& a = r.sorted;
  for (std::size_t i = 1; i < a.size(); ++i) {
    const Key k = a[i];
    std::size_t j = i;
    while (j > 0 && counted_less(k, a[j - 1], r.metrics)) {
      a[j] = a[j - 1];
      ++r.metrics.relinks;
      --j;
    }
    if (j != i) {
      a[j] = k;
      ++r.metrics.relinks;
    }
  }
  return r;
}

/// Lomuto partition around the last element, driven by an explicit stack.
/// The larger side is pushed and the smaller processed first, so the stack
/// stays O(log n) deep; sorted input still costs n(n-1)/2 comparisons.
inline SortResult quick_sort(std::span<const Key> input) {
  SortResult r{{input.begin(), input.end()}, {}};
  auto& a = r.sorted;
  if (a.size() < 2) return r;

  std::vector<std::pair<std::size_t, std::size_t>> stack;  // inclusive bounds
  stack.emplace_back(0, a.size() - 1);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    while (lo < hi) {
      const Key pivot = a[hi];
      std::size_t store = lo;
      for (std::size_t j = lo; j < hi; ++j) {
        if (counted_less(a[j], pivot, r.metrics)) {
          if (store != j) {
            std::swap(a[store], a[j]);
            r.metrics.relinks += 2;
          }
          ++store;
        }
      }
      if (store != hi) {
        std::swap(a[store], a[hi]);
        r.metrics.relinks += 2;
      }
      // left: [lo, store-1], right: [store+1, hi]
      const std::size_t left_len = store - lo;
      const std::size_t right_len = hi - store;
      if (left_len < right_len) {
        if (right_len > 1) stack.emplace_back(store + 1, hi);
        if (left_len == 0) break;
        hi = store - 1;
      } else {
        if (left_len > 1) stack.emplace_back(lo, store - 1);
        if (right_len == 0) break;
        lo = store + 1;
      }
    }
  }
  return r;
}

namespace detail {
inline void merge_sort_rec(std::vector<Key>& a, std::vector<Key>& aux, std::size_t lo,
                           std::size_t hi, Metrics& m) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort_rec(a, aux, lo, mid, m);
  merge_sort_rec(a, aux, mid, hi, m);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) aux[k++] = counted_less(a[j], a[i], m) ? a[j++] : a[i++];
  while (i < mid) aux[k++] = a[i++];
  while (j < hi) aux[k++] = a[j++];
  for (k = lo; k < hi; ++k) a[k] = aux[k];
  m.relinks += 2 * (hi - lo);
  ++m.merges;
}
}  // namespace detail

/// Top-down array merge sort with one auxiliary buffer. Stable.
inline SortResult merge_sort_array(std::span<const Key> input) {
  SortResult r{{input.begin(), input.end()}, {}};
  std::vector<Key> aux(r.sorted.size());
  detail::merge_sort_rec(r.sorted, aux, 0, r.sorted.size(), r.metrics);
  return r;
}

/// Bottom-up merge sort over a singly linked node list. Sublists are kept in
/// binary-counter bins (bin i holds 2^i nodes) and merged by relinking.
/// Stable: a bin always holds elements that precede the carry.
inline SortResult merge_sort_linked(std::span<const Key> input) {
  constexpr std::uint32_t nil = std::numeric_limits<std::uint32_t>::max();
  struct LNode {
    Key key;
    std::uint32_t next;
  };
  SortResult r;
  const std::size_t n = input.size();
  std::vector<LNode> nodes;
  nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    nodes.push_back(LNode{input[i], i + 1 < n ? static_cast<std::uint32_t>(i + 1) : nil});

  Metrics& m = r.metrics;
  auto merge = [&](std::uint32_t left, std::uint32_t right) {
    if (left == nil) return right;
    if (right == nil) return left;
    std::uint32_t head = nil, tail = nil;
    auto take = [&](std::uint32_t& from) {
      const std::uint32_t idx = from;
      from = nodes[idx].next;
      if (tail == nil)
        head = idx;
      else
        nodes[tail].next = idx;
      tail = idx;
      ++m.relinks;
    };
    while (left != nil && right != nil) {
      if (counted_less(nodes[right].key, nodes[left].key, m))
        take(right);
      else
        take(left);
    }
    nodes[tail].next = left != nil ? left : right;
    ++m.relinks;
    ++m.merges;
    return head;
  };

  std::array<std::uint32_t, 64> bins;
  bins.fill(nil);
  std::size_t used = 0;
  std::uint32_t rest = n == 0 ? nil : 0;
  while (rest != nil) {
    std::uint32_t carry = rest;
    rest = nodes[rest].next;
    nodes[carry].next = nil;
    std::size_t i = 0;
    for (; i < used && bins[i] != nil; ++i) {
      carry = merge(bins[i], carry);
      bins[i] = nil;
    }
    bins[i] = carry;
    if (i == used) ++used;
  }
  std::uint32_t head = nil;
  for (std::size_t i = 0; i < used; ++i) head = merge(bins[i], head);

  r.sorted.reserve(n);
  for (std::uint32_t i = head; i != nil; i = nodes[i].next) r.sorted.push_back(nodes[i].key);
  return r;
}

}  // namespace listsort

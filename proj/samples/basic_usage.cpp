// SPDX-License-Identifier: Apache-2.0
//
// Sorts the worst-case interleave pattern and a random input, printing the
// sorted keys and the operation counters.

#include <cstdio>

#include "listsort/datagen.hpp"
#include "listsort/list_sort.hpp"

int main() {
  using namespace listsort;

  const auto input = make_keys({1, 10, 2, 9, 3, 8, 4, 7, 5, 6});
  const auto result = list_sort(input);
  for (const Key& k : result.sorted) std::printf("%lld ", static_cast<long long>(k.value));
  std::printf("\ncomparisons=%llu runs=%llu merges=%llu L=%llu\n",
              static_cast<unsigned long long>(result.metrics.comparisons),
              static_cast<unsigned long long>(result.metrics.runs_created),
              static_cast<unsigned long long>(result.metrics.merges),
              static_cast<unsigned long long>(result.metrics.capacity_used));

  const auto random = generate(pattern::Random{42}, 100000);
  const auto big = list_sort(random);
  std::printf("random n=100000: comparisons=%llu runs=%llu L=%llu sorted=%s\n",
              static_cast<unsigned long long>(big.metrics.comparisons),
              static_cast<unsigned long long>(big.metrics.runs_created),
              static_cast<unsigned long long>(big.metrics.capacity_used),
              verify_sorted(random, big.sorted) ? "no" : "yes");
}

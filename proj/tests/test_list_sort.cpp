// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "listsort/datagen.hpp"
#include "listsort/list_sort.hpp"

namespace {

using namespace listsort;
using PoolRun = listsort::Run;  // gtest fixtures have a Run() member

// Independent evaluation of the capacity ladder in floating point.
std::size_t capacity_oracle(std::size_t n) {
  const long double tt = static_cast<long double>(n / 10000);
  long double v;
  if (tt <= 0)
    v = 15;
  else if (tt - 10 <= 0)
    v = tt * 5;
  else if (tt - 50 <= 0)
    v = 50 + (tt - 10) * 3;
  else if (tt - 100 <= 0)
    v = 170 + (tt - 50) * 1;
  else if (tt - 500 <= 0)
    v = 220 + (tt - 100) * 0.45L;
  else if (tt - 1000 <= 0)
    v = 400 + (tt - 500) * 0.15L;
  else if (tt - 10000 <= 0)
    v = 475 + (tt - 1000) * 0.032L;
  else
    v = 10000;
  const auto r = static_cast<std::size_t>(std::floor(v + 0.5L + 1e-9L));
  return std::max<std::size_t>(r, 2);
}

std::vector<Key> stable_reference(std::vector<Key> keys) {
  std::stable_sort(keys.begin(), keys.end(),
                   [](const Key& a, const Key& b) { return a.value < b.value; });
  return keys;
}

// A pool's run as a plain key vector.
std::vector<std::int64_t> run_values(const RunPool& pool, std::size_t i) {
  return values_of(pool.keys(pool.runs()[i]));
}

// Builds a standalone run in `arena` from sorted keys.
PoolRun build_run(std::vector<Node>& arena, const std::vector<Key>& keys, std::size_t created_at) {
  PoolRun run{detail::nil, detail::nil, 0, created_at};
  for (const Key& k : keys) {
    arena.push_back(Node{k, detail::nil});
    const auto idx = static_cast<std::uint32_t>(arena.size() - 1);
    if (run.empty())
      run.head = idx;
    else
      arena[run.tail].next = idx;
    run.tail = idx;
    ++run.length;
  }
  return run;
}

std::vector<Key> collect(const std::vector<Node>& arena, const PoolRun& run) {
  std::vector<Key> out;
  for (auto i = run.head; i != detail::nil; i = arena[i].next) out.push_back(arena[i].key);
  return out;
}

std::vector<Key> keys_with_tags(std::initializer_list<std::int64_t> values, std::uint32_t first_tag) {
  std::vector<Key> out;
  for (auto v : values) out.push_back(Key{v, first_tag++});
  return out;
}

// ---------------------------------------------------------------------------
// list_capacity

TEST(ListCapacity, DocumentedPoints) {
  EXPECT_EQ(list_capacity(5000), 15u);
  EXPECT_EQ(list_capacity(100000), 50u);
  EXPECT_EQ(list_capacity(1000000), 220u);
  EXPECT_EQ(list_capacity(2000000), 265u);  // 220 + 0.45 * 100
  EXPECT_EQ(list_capacity(0), 15u);
}

TEST(ListCapacity, LadderBreakpoints) {
  EXPECT_EQ(list_capacity(0 * 10000), 15u);
  EXPECT_EQ(list_capacity(10 * 10000), 50u);
  EXPECT_EQ(list_capacity(50 * 10000), 170u);
  EXPECT_EQ(list_capacity(100 * 10000), 220u);
  EXPECT_EQ(list_capacity(500 * 10000), 400u);
  EXPECT_EQ(list_capacity(1000 * 10000), 475u);
  EXPECT_EQ(list_capacity(10000ull * 10000), 763u);
  EXPECT_EQ(list_capacity(10001ull * 10000), 10000u);
}

TEST(ListCapacity, MatchesFloatingPointOracle) {
  for (std::size_t tt = 0; tt <= 10100; ++tt) {
    for (std::size_t n : {tt * 10000, tt * 10000 + 9999}) {
      ASSERT_EQ(list_capacity(n), capacity_oracle(n)) << "n=" << n;
    }
  }
}

TEST(ListCapacity, RoundsHalfUp) {
  EXPECT_EQ(list_capacity(110 * 10000), 225u);   // 224.5
  EXPECT_EQ(list_capacity(101 * 10000), 220u);   // 220.45
  EXPECT_EQ(list_capacity(510 * 10000), 402u);   // 401.5
}

TEST(ListCapacity, NonDecreasingAfterFirstTenThousand) {
  for (std::size_t tt = 1; tt < 10000; ++tt)
    ASSERT_LE(list_capacity(tt * 10000), list_capacity((tt + 1) * 10000)) << tt;
}

// ---------------------------------------------------------------------------
// try_extend

TEST(TryExtend, PrependsBelowHead) {
  std::vector<Node> arena;
  PoolRun run = build_run(arena, make_keys({5, 10}), 1);
  arena.push_back(Node{Key{3, 2}});
  Metrics m;
  EXPECT_EQ(try_extend(arena, run, 2, m), Extend::prepended);
  EXPECT_EQ(values_of(collect(arena, run)), (std::vector<std::int64_t>{3, 5, 10}));
  EXPECT_EQ(m.comparisons, 1u);
}

TEST(TryExtend, EqualToTailAppends) {
  std::vector<Node> arena;
  PoolRun run = build_run(arena, make_keys({5, 10}), 1);
  arena.push_back(Node{Key{10, 2}});
  Metrics m;
  EXPECT_EQ(try_extend(arena, run, 2, m), Extend::appended);
  EXPECT_EQ(values_of(collect(arena, run)), (std::vector<std::int64_t>{5, 10, 10}));
  EXPECT_EQ(m.comparisons, 2u);
}

TEST(TryExtend, InteriorKeyIsRejected) {
  std::vector<Node> arena;
  PoolRun run = build_run(arena, make_keys({5, 10}), 1);
  arena.push_back(Node{Key{7, 2}});
  Metrics m;
  EXPECT_EQ(try_extend(arena, run, 2, m), Extend::rejected);
  EXPECT_EQ(values_of(collect(arena, run)), (std::vector<std::int64_t>{5, 10}));
  EXPECT_EQ(run.length, 2u);
  EXPECT_EQ(m.comparisons, 2u);
}

TEST(TryExtend, EqualToHeadOfSingletonAppends) {
  std::vector<Node> arena;
  PoolRun run = build_run(arena, make_keys({5}), 1);
  arena.push_back(Node{Key{5, 1}});
  Metrics m;
  EXPECT_EQ(try_extend(arena, run, 1, m), Extend::appended);
  EXPECT_EQ(tags_of(collect(arena, run)), (std::vector<std::uint32_t>{0, 1}));
}

// ---------------------------------------------------------------------------
// insert_element

TEST(InsertElement, FirstKeySeedsRunOne) {
  RunPool pool(15, 4);
  Metrics m;
  pool.insert(Key{10, 0}, m);
  ASSERT_EQ(pool.runs().size(), 1u);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{10}));
  EXPECT_EQ(pool.runs()[0].created_at, 1u);
  EXPECT_EQ(m.runs_created, 1u);
}

TEST(InsertElement, RejectedKeyOpensNewRun) {
  RunPool pool(15, 4);
  Metrics m;
  pool.push_run(make_keys({1, 10}));
  pool.insert(Key{2, 2}, m);
  ASSERT_EQ(pool.runs().size(), 2u);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{1, 10}));
  EXPECT_EQ(run_values(pool, 1), (std::vector<std::int64_t>{2}));
  EXPECT_EQ(pool.runs()[1].created_at, 2u);
  EXPECT_EQ(m.runs_created, 1u);
}

TEST(InsertElement, FullPoolCollapsesThenRetries) {
  RunPool pool(3, 16);
  pool.push_run(keys_with_tags({1, 10}, 0));
  pool.push_run(keys_with_tags({2, 9}, 2));
  pool.push_run(keys_with_tags({3, 8}, 4));
  Metrics m;
  pool.insert(Key{4, 6}, m);
  // merged run [1,2,3,8,9,10] rejects 4, which then opens run #2
  ASSERT_EQ(pool.runs().size(), 2u);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{1, 2, 3, 8, 9, 10}));
  EXPECT_EQ(run_values(pool, 1), (std::vector<std::int64_t>{4}));
  EXPECT_EQ(pool.runs()[0].created_at, 1u);
  EXPECT_EQ(pool.runs()[1].created_at, 2u);
  EXPECT_EQ(m.merges, 2u);
  EXPECT_EQ(m.runs_created, 1u);
}

TEST(InsertElement, ProbesOlderRunsFirst) {
  RunPool pool(15, 8);
  pool.push_run(keys_with_tags({1, 10}, 0));
  pool.push_run(keys_with_tags({4, 6}, 2));
  Metrics m;
  pool.insert(Key{12, 4}, m);  // run #1 takes it at the tail
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{1, 10, 12}));
  EXPECT_EQ(run_values(pool, 1), (std::vector<std::int64_t>{4, 6}));
  EXPECT_EQ(m.comparisons, 2u);
}

TEST(InsertElement, NewestOnlyIgnoresOlderRuns) {
  RunPool pool(15, 8, true, ProbePolicy::newest_only);
  pool.push_run(keys_with_tags({1, 10}, 0));
  pool.push_run(keys_with_tags({4, 6}, 2));
  Metrics m;
  pool.insert(Key{12, 4}, m);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{1, 10}));
  EXPECT_EQ(run_values(pool, 1), (std::vector<std::int64_t>{4, 6, 12}));
}

TEST(RunPool, RejectsCapacityBelowTwo) {
  EXPECT_THROW(RunPool(1, 0), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// merge_pair

struct MergeCase {
  std::vector<Key> earlier, later;
};

// Oracle: concatenation in creation order, then a stable sort.
std::vector<Key> merge_oracle(const MergeCase& c) {
  std::vector<Key> all = c.earlier;
  all.insert(all.end(), c.later.begin(), c.later.end());
  return stable_reference(all);
}

std::vector<Key> merge_via_pair(const MergeCase& c, bool optimized, Metrics& m) {
  std::vector<Node> arena;
  const PoolRun a = build_run(arena, c.earlier, 1);
  const PoolRun b = build_run(arena, c.later, 2);
  const PoolRun out = merge_pair(arena, a, b, m, optimized);
  auto keys = collect(arena, out);
  EXPECT_EQ(out.length, keys.size());
  EXPECT_EQ(out.created_at, 1u);
  if (!keys.empty()) {
    EXPECT_EQ(arena[out.head].key, keys.front());
    EXPECT_EQ(arena[out.tail].key, keys.back());
  }
  return keys;
}

TEST(MergePair, InterleavedRuns) {
  const MergeCase c{keys_with_tags({1, 10}, 0), keys_with_tags({2, 9}, 2)};
  for (bool opt : {true, false}) {
    Metrics m;
    const auto out = merge_via_pair(c, opt, m);
    EXPECT_EQ(values_of(out), (std::vector<std::int64_t>{1, 2, 9, 10}));
    EXPECT_EQ(out, merge_oracle(c));
    EXPECT_EQ(m.merges, 1u);
  }
}

TEST(MergePair, LaterHeadBelowEarlierHead) {
  const MergeCase c{keys_with_tags({5, 7}, 0), keys_with_tags({1, 6}, 2)};
  for (bool opt : {true, false}) {
    Metrics m;
    const auto out = merge_via_pair(c, opt, m);
    EXPECT_EQ(values_of(out), (std::vector<std::int64_t>{1, 5, 6, 7}));
    EXPECT_EQ(out, merge_oracle(c));
  }
}

TEST(MergePair, EqualKeysKeepEarlierRunFirst) {
  const MergeCase c{{Key{3, 0}}, {Key{3, 1}}};
  for (bool opt : {true, false}) {
    Metrics m;
    const auto out = merge_via_pair(c, opt, m);
    EXPECT_EQ(out, (std::vector<Key>{Key{3, 0}, Key{3, 1}}));
  }
  // shorter earlier run is threaded into the later one
  const MergeCase d{{Key{3, 0}}, {Key{1, 1}, Key{3, 2}, Key{3, 3}}};
  Metrics m;
  EXPECT_EQ(merge_via_pair(d, true, m), merge_oracle(d));
}

TEST(MergePair, EitherSideExhaustsFirst) {
  const MergeCase low_high{keys_with_tags({1, 2, 3}, 0), keys_with_tags({7, 8}, 3)};
  const MergeCase high_low{keys_with_tags({7, 8, 9}, 0), keys_with_tags({1, 2}, 3)};
  for (const auto& c : {low_high, high_low}) {
    for (bool opt : {true, false}) {
      Metrics m;
      EXPECT_EQ(merge_via_pair(c, opt, m), merge_oracle(c));
    }
  }
}

TEST(MergePair, RandomRunsMatchOracleInBothDirections) {
  SplitMix64 rng(2024);
  for (int iter = 0; iter < 3000; ++iter) {
    const std::size_t la = 1 + rng() % 40, lb = 1 + rng() % 40;
    const std::uint64_t range = 1 + rng() % 30;
    MergeCase c;
    std::uint32_t tag = 0;
    for (std::size_t i = 0; i < la; ++i) c.earlier.push_back(Key{static_cast<std::int64_t>(rng() % range), tag++});
    for (std::size_t i = 0; i < lb; ++i) c.later.push_back(Key{static_cast<std::int64_t>(rng() % range), tag++});
    c.earlier = stable_reference(c.earlier);
    c.later = stable_reference(c.later);

    Metrics m_opt, m_plain;
    const auto with_opt = merge_via_pair(c, true, m_opt);
    const auto without = merge_via_pair(c, false, m_plain);
    const auto expect = merge_oracle(c);
    ASSERT_EQ(with_opt, expect) << iter;
    ASSERT_EQ(without, expect) << iter;
    ASSERT_EQ(with_opt.size(), la + lb);
    // Threading never touches more nodes than the shorter side plus one tail splice.
    ASSERT_LE(m_opt.relinks, std::min(la, lb));
    ASSERT_LE(m_plain.relinks, lb);
  }
}

TEST(MergePair, EmptySideReturnsOther) {
  std::vector<Node> arena;
  const PoolRun a = build_run(arena, make_keys({1, 2}), 1);
  const PoolRun empty{detail::nil, detail::nil, 0, 2};
  Metrics m;
  EXPECT_EQ(values_of(collect(arena, merge_pair(arena, a, empty, m))),
            (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(values_of(collect(arena, merge_pair(arena, PoolRun{detail::nil, detail::nil, 0, 1}, a, m))),
            (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(m.comparisons, 0u);
}

// ---------------------------------------------------------------------------
// merge_all

TEST(MergeAll, InterleavePoolOfThree) {
  RunPool pool(15, 8);
  pool.push_run(keys_with_tags({1, 10}, 0));
  pool.push_run(keys_with_tags({2, 9}, 2));
  pool.push_run(keys_with_tags({3, 8}, 4));
  Metrics m;
  pool.merge_all(m);
  ASSERT_EQ(pool.runs().size(), 1u);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{1, 2, 3, 8, 9, 10}));
  EXPECT_EQ(pool.runs()[0].created_at, 1u);
  EXPECT_EQ(m.merges, 2u);
}

TEST(MergeAll, SingleRunUnchanged) {
  RunPool pool(15, 8);
  pool.push_run(make_keys({4, 5, 6}));
  Metrics m;
  pool.merge_all(m);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{4, 5, 6}));
  EXPECT_EQ(m.merges, 0u);
  EXPECT_EQ(m.comparisons, 0u);
}

TEST(MergeAll, DisjointRangesConcatenate) {
  RunPool pool(15, 8);
  pool.push_run(keys_with_tags({1, 2, 3}, 0));
  pool.push_run(keys_with_tags({4}, 3));
  Metrics m;
  pool.merge_all(m);
  EXPECT_EQ(run_values(pool, 0), (std::vector<std::int64_t>{1, 2, 3, 4}));
  EXPECT_EQ(m.merges, 1u);
}

// ---------------------------------------------------------------------------
// list_sort

TEST(ListSort, EmptyInput) {
  const auto r = list_sort({});
  EXPECT_TRUE(r.sorted.empty());
  EXPECT_EQ(r.metrics.comparisons, 0u);
  EXPECT_EQ(r.metrics.relinks, 0u);
  EXPECT_EQ(r.metrics.runs_created, 0u);
  EXPECT_EQ(r.metrics.merges, 0u);
}

TEST(ListSort, SingleElement) {
  const auto in = make_keys({42});
  const auto r = list_sort(in);
  EXPECT_EQ(r.sorted, in);
  EXPECT_EQ(r.metrics.comparisons, 0u);
  EXPECT_EQ(r.metrics.runs_created, 1u);
}

TEST(ListSort, WorstInterleaveOfTen) {
  const auto in = make_keys({1, 10, 2, 9, 3, 8, 4, 7, 5, 6});
  const auto r = list_sort(in);
  EXPECT_EQ(values_of(r.sorted), (std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(r.metrics.runs_created, 5u);
  EXPECT_EQ(r.metrics.capacity_used, 15u);
}

TEST(ListSort, CapacityOverrideIsUsed) {
  ListSortOptions o;
  o.capacity = 3;
  const auto r = list_sort(generate(pattern::Random{9}, 500), o);
  EXPECT_EQ(r.metrics.capacity_used, 3u);
  o.capacity = 1;
  EXPECT_THROW(list_sort(generate(pattern::Random{9}, 10), o), std::invalid_argument);
}

TEST(ListSort, MatchesReferenceOnRandomInputs) {
  SplitMix64 rng(77);
  for (int iter = 0; iter < 10000; ++iter) {
    const std::size_t n = rng() % 513;
    const std::uint64_t range = (iter % 2) ? (std::uint64_t{1} << 31) : 1 + n / 3;
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % range);
    const auto in = make_keys(v);
    const auto r = list_sort(in);
    ASSERT_FALSE(verify_sorted(in, r.sorted)) << iter;
    auto expect = v;
    std::sort(expect.begin(), expect.end());
    ASSERT_EQ(values_of(r.sorted), expect) << iter;
  }
}

TEST(ListSort, StableOnHeavyDuplicates) {
  SplitMix64 rng(5);
  for (int iter = 0; iter < 4000; ++iter) {
    const std::size_t n = rng() % 257;
    const std::uint64_t range = 1 + rng() % 8;
    std::vector<std::int64_t> v(n);
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % range);
    const auto in = make_keys(v);
    for (auto probe : {ProbePolicy::all_runs, ProbePolicy::newest_only}) {
      ListSortOptions o;
      o.probe = probe;
      o.capacity = 2 + rng() % 6;
      ASSERT_EQ(list_sort(in, o).sorted, stable_reference(in)) << iter;
    }
  }
}

TEST(ListSort, BestCaseIsOneRunNoMerges) {
  for (std::size_t n : {1u, 2u, 3u, 17u, 1000u, 50000u}) {
    for (auto probe : {ProbePolicy::all_runs, ProbePolicy::newest_only}) {
      ListSortOptions o;
      o.probe = probe;
      const auto asc = list_sort(generate(pattern::Ascending{}, n), o);
      EXPECT_EQ(asc.metrics.runs_created, 1u);
      EXPECT_EQ(asc.metrics.merges, 0u);
      EXPECT_LE(asc.metrics.comparisons, 2 * n);
      EXPECT_EQ(asc.metrics.comparisons, 2 * (n - 1));  // head probe + tail probe, all appends

      const auto desc = list_sort(generate(pattern::Descending{}, n), o);
      EXPECT_EQ(desc.metrics.runs_created, 1u);
      EXPECT_EQ(desc.metrics.merges, 0u);
      EXPECT_EQ(desc.metrics.comparisons, n - 1);  // head probe only, all prepends
      EXPECT_EQ(values_of(desc.sorted), values_of(asc.sorted));
    }
  }
}

// Records the shape of the pool each time insertion forces a collapse.
struct CollapseRecorder {
  std::vector<std::vector<std::size_t>> lengths;  // run lengths per collapse
  std::vector<std::vector<std::size_t>> ordinals;
  void before_merge_all(const RunPool& pool) {
    auto& l = lengths.emplace_back();
    auto& o = ordinals.emplace_back();
    for (const PoolRun& r : pool.runs()) {
      l.push_back(r.length);
      o.push_back(r.created_at);
    }
  }
};

TEST(ListSort, WorstInterleaveBuildsPairs) {
  for (auto probe : {ProbePolicy::all_runs, ProbePolicy::newest_only}) {
    for (std::size_t n : {10u, 100u, 1000u, 10000u}) {
      for (std::size_t cap : {2u, 3u, 15u, 50u}) {
        ListSortOptions o;
        o.capacity = cap;
        o.probe = probe;
        CollapseRecorder rec;
        const auto in = generate(pattern::WorstInterleave{}, n);
        const auto r = list_sort(in, o, rec);
        ASSERT_FALSE(verify_sorted(in, r.sorted));
        EXPECT_EQ(r.metrics.runs_created, n / 2) << n << " L=" << cap;
        for (std::size_t c = 0; c < rec.lengths.size(); ++c) {
          ASSERT_EQ(rec.lengths[c].size(), cap);
          // after the first collapse, run #1 is the merged survivor
          for (std::size_t i = (c == 0 ? 0 : 1); i < cap; ++i)
            ASSERT_EQ(rec.lengths[c][i], 2u) << "collapse " << c << " run " << i;
          for (std::size_t i = 0; i < cap; ++i) ASSERT_EQ(rec.ordinals[c][i], i + 1);
        }
      }
    }
  }
}

TEST(ListSort, PoolNeverExceedsCapacityAndRunsStaySorted) {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t cap = 2 + rng() % 10;
    const std::size_t n = rng() % 400;
    for (auto probe : {ProbePolicy::all_runs, ProbePolicy::newest_only}) {
      RunPool pool(cap, n, true, probe);
      Metrics m;
      for (std::size_t i = 0; i < n; ++i) {
        pool.insert(Key{static_cast<std::int64_t>(rng() % 1000), static_cast<std::uint32_t>(i)}, m);
        ASSERT_LE(pool.runs().size(), cap);
        ASSERT_EQ(pool.runs().back().created_at, pool.runs().size());
      }
      for (const PoolRun& run : pool.runs()) {
        const auto v = values_of(pool.keys(run));
        ASSERT_EQ(v.size(), run.length);
        ASSERT_TRUE(std::is_sorted(v.begin(), v.end()));
      }
    }
  }
}

TEST(ListSort, AllRunsProbingKeepsRangesNested) {
  SplitMix64 rng(3);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t cap = 2 + rng() % 20;
    RunPool pool(cap, 600);
    Metrics m;
    for (std::uint32_t i = 0; i < 600; ++i) {
      pool.insert(Key{static_cast<std::int64_t>(rng() % 500), i}, m);
      const auto runs = pool.runs();
      for (std::size_t j = 1; j < runs.size(); ++j) {
        const auto& arena = pool.arena();
        ASSERT_LE(arena[runs[j - 1].head].key.value, arena[runs[j].head].key.value);
        ASSERT_GT(arena[runs[j - 1].tail].key.value, arena[runs[j].tail].key.value);
      }
    }
  }
}

TEST(ListSort, Idempotent) {
  SplitMix64 rng(8);
  for (int iter = 0; iter < 500; ++iter) {
    const auto in = generate(pattern::Random{rng()}, rng() % 300);
    const auto once = list_sort(in).sorted;
    const auto twice = list_sort(once);
    ASSERT_EQ(twice.sorted, once);
    if (!once.empty()) {
      EXPECT_EQ(twice.metrics.runs_created, 1u);
      EXPECT_EQ(twice.metrics.merges, 0u);
    }
  }
}

TEST(ListSort, OptimizationDoesNotChangeOutput) {
  SplitMix64 rng(99);
  for (int iter = 0; iter < 2000; ++iter) {
    const std::size_t n = rng() % 513;
    std::vector<std::int64_t> v(n);
    const std::uint64_t range = (iter % 3 == 0) ? 5 : 1000000;
    for (auto& x : v) x = static_cast<std::int64_t>(rng() % range);
    const auto in = make_keys(v);
    ListSortOptions off;
    off.smaller_into_bigger = false;
    const auto a = list_sort(in);
    const auto b = list_sort(in, off);
    ASSERT_EQ(a.sorted, b.sorted) << iter;
    ASSERT_EQ(a.metrics.runs_created, b.metrics.runs_created);
    ASSERT_EQ(a.metrics.merges, b.metrics.merges);
  }
}

TEST(ListSort, RandomHundredThousandRunCount) {
  // Runs created on random input stay in the low thousands with probing of
  // all runs, far below the ~n/3 produced by newest-only probing.
  const auto in = generate(pattern::Random{42}, 100000);
  const auto all = list_sort(in);
  ListSortOptions newest;
  newest.probe = ProbePolicy::newest_only;
  const auto only = list_sort(in, newest);
  EXPECT_EQ(all.metrics.capacity_used, 50u);
  EXPECT_GT(all.metrics.runs_created, 1000u);
  EXPECT_LT(all.metrics.runs_created, 6000u);
  EXPECT_GT(only.metrics.runs_created, 25000u);
  EXPECT_EQ(all.sorted, only.sorted);
}

}  // namespace

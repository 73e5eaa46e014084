#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "trifree/ksubset.hpp"

namespace trifree {
namespace {

using Set = std::vector<int>;

Set values(const SubsetCursor& c) { return {c.values().begin(), c.values().end()}; }

std::vector<Set> run_all(const Set& ground, int k) {
  std::vector<Set> out;
  for (auto c = SubsetCursor::first(ground, k); !c.exhausted(); c.next()) {
    out.push_back(values(c));
  }
  return out;
}

// All k-subsets via bitmasks, sorted; independent of the cursor.
std::vector<Set> all_subsets_sorted(const Set& ground, int k) {
  std::vector<Set> out;
  const unsigned m = static_cast<unsigned>(ground.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Set s;
    for (unsigned i = 0; i < m; ++i) {
      if (mask >> i & 1u) s.push_back(ground[i]);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long binomial(int m, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

TEST(SubsetCursor, FirstExamples) {
  EXPECT_EQ(values(SubsetCursor::first(Set{2, 3, 4, 5}, 2)), (Set{2, 3}));
  EXPECT_EQ(values(SubsetCursor::first(Set{7}, 1)), (Set{7}));
  EXPECT_TRUE(SubsetCursor::first(Set{2, 3}, 3).exhausted());
  const auto empty = SubsetCursor::first(Set{2, 3}, 0);
  EXPECT_FALSE(empty.exhausted());
  EXPECT_TRUE(empty.values().empty());
}

TEST(SubsetCursor, NextExamples) {
  auto c = SubsetCursor::first(Set{2, 3, 4, 5}, 2);
  ASSERT_TRUE(c.next());
  EXPECT_EQ(values(c), (Set{2, 4}));

  auto last = SubsetCursor::first_above(Set{2, 3, 4, 5}, 2, Set{3, 5});
  EXPECT_EQ(values(last), (Set{4, 5}));
  EXPECT_FALSE(last.next());
  EXPECT_TRUE(last.exhausted());

  EXPECT_EQ(run_all(Set{1, 2, 3}, 2), (std::vector<Set>{{1, 2}, {1, 3}, {2, 3}}));
}

TEST(SubsetCursor, FirstAboveExamples) {
  EXPECT_EQ(values(SubsetCursor::first_above(Set{2, 3, 4, 5}, 2, Set{2, 3})),
            (Set{2, 4}));
  EXPECT_EQ(values(SubsetCursor::first_above(Set{2, 4, 5}, 2, Set{2, 3})),
            (Set{2, 4}));
  EXPECT_TRUE(SubsetCursor::first_above(Set{2, 3}, 2, Set{2, 3}).exhausted());
  EXPECT_TRUE(SubsetCursor::first_above(Set{2, 3}, 0, Set{}).exhausted());
}

TEST(SubsetCursor, FirstAboveMinimalityByScan) {
  // ground (2,4,5), bound {2,3}: every 2-subset above the bound, smallest wins.
  const auto all = all_subsets_sorted(Set{2, 4, 5}, 2);
  const auto it = std::upper_bound(all.begin(), all.end(), Set{2, 3});
  ASSERT_NE(it, all.end());
  EXPECT_EQ(*it, (Set{2, 4}));
}

TEST(SubsetCursor, FullIterationIsStrictlyIncreasingAndComplete) {
  for (int m = 0; m <= 10; ++m) {
    Set ground(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) ground[i] = 3 * i + 1;
    for (int k = 0; k <= m; ++k) {
      const auto seq = run_all(ground, k);
      ASSERT_EQ(static_cast<long long>(seq.size()), binomial(m, k));
      for (std::size_t i = 1; i < seq.size(); ++i) {
        ASSERT_LT(seq[i - 1], seq[i]);
      }
      ASSERT_EQ(seq, all_subsets_sorted(ground, k));
    }
  }
}

TEST(SubsetCursor, PositionsStayStrictlyIncreasingInRange) {
  const Set ground{0, 2, 5, 6, 9, 11};
  for (int k = 1; k <= 6; ++k) {
    for (auto c = SubsetCursor::first(ground, k); !c.exhausted(); c.next()) {
      const auto pos = c.positions();
      for (std::size_t i = 0; i < pos.size(); ++i) {
        ASSERT_GE(pos[i], 0);
        ASSERT_LT(pos[i], 6);
        if (i) ASSERT_LT(pos[i - 1], pos[i]);
        ASSERT_EQ(c.values()[i], ground[pos[i]]);
      }
    }
  }
}

TEST(SubsetCursor, FirstAboveMatchesBruteForce) {
  std::mt19937 rng(11);
  const Set universe{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  for (int m = 0; m <= 8; ++m) {
    for (int trial = 0; trial < 6; ++trial) {
      Set ground = universe;
      std::shuffle(ground.begin(), ground.end(), rng);
      ground.resize(static_cast<std::size_t>(m));
      std::sort(ground.begin(), ground.end());
      for (int k = 0; k <= m; ++k) {
        const auto sorted = all_subsets_sorted(ground, k);
        for (const Set& bound : all_subsets_sorted(universe, k)) {
          const auto c = SubsetCursor::first_above(ground, k, bound);
          const auto it = std::upper_bound(sorted.begin(), sorted.end(), bound);
          if (it == sorted.end()) {
            ASSERT_TRUE(c.exhausted());
          } else {
            ASSERT_FALSE(c.exhausted());
            ASSERT_EQ(values(c), *it);
          }
        }
      }
    }
  }
}

TEST(SubsetCursor, OrderSurvivesMonotoneRelabeling) {
  const Set ground{1, 2, 3, 4, 5, 6, 7};
  Set relabeled;
  for (int g : ground) relabeled.push_back(g * g + 10);
  for (int k = 0; k <= 7; ++k) {
    const auto a = run_all(ground, k);
    const auto b = run_all(relabeled, k);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a[i].size(); ++j) {
        ASSERT_EQ(b[i][j], a[i][j] * a[i][j] + 10);
      }
    }
  }
}

}  // namespace
}  // namespace trifree

#include "bell/exact.hpp"
#include "bell/partition.hpp"

#include <gtest/gtest.h>

#include <set>

using bell::ArbInt;
namespace ex = bell::exact;
namespace orc = bell::oracle;

TEST(Rgs, Validation) {
  EXPECT_NO_THROW(orc::RestrictedGrowthString({0, 1, 0, 2}));
  EXPECT_THROW(orc::RestrictedGrowthString({1, 0}), std::invalid_argument);
  EXPECT_THROW(orc::RestrictedGrowthString({0, 2}), std::invalid_argument);
  EXPECT_THROW(orc::RestrictedGrowthString({0, -1}), std::invalid_argument);
  const orc::RestrictedGrowthString r({0, 1, 0, 2, 1});
  EXPECT_EQ(r.block_count(), 3);
  EXPECT_EQ(r.blocks(), (std::vector<std::vector<int>>{{1, 3}, {2, 5}, {4}}));
}

TEST(Enumerate, CountsAreBellNumbers) {
  const auto bells = ex::bell_numbers(orc::kEnumerateCap);
  for (int n = 1; n <= orc::kEnumerateCap; ++n) {
    EXPECT_EQ(ArbInt(static_cast<unsigned long>(orc::enumerate_partitions(n, [](const auto&) {}))),
              bells[static_cast<std::size_t>(n)]);
  }
  EXPECT_THROW(orc::enumerate_partitions(0, [](const auto&) {}), std::out_of_range);
  EXPECT_THROW(orc::enumerate_partitions(orc::kEnumerateCap + 1, [](const auto&) {}), std::out_of_range);
}

TEST(Enumerate, DistinctAndOrdered) {
  std::vector<std::vector<int>> seen;
  orc::enumerate_partitions(6, [&](const orc::RestrictedGrowthString& r) {
    seen.emplace_back(r.codes().begin(), r.codes().end());
  });
  EXPECT_EQ(seen.size(), 203u);
  EXPECT_TRUE(std::is_sorted(seen.begin(), seen.end()));
  EXPECT_EQ(std::set<std::vector<int>>(seen.begin(), seen.end()).size(), seen.size());
}

TEST(Stats, MatchExactFormulas) {
  for (int n = 1; n <= 9; ++n) {
    const auto st = orc::collect_stats(n);
    const auto bells = ex::bell_numbers(n);
    const auto beta = ex::beta_numbers(n);
    EXPECT_EQ(st.total, bells.back());
    EXPECT_EQ(st.no_singleton_total, beta.back());
    for (const auto& [shape, count] : st.by_shape) EXPECT_EQ(count, ex::bell_polynomial_coefficient(shape, n));
    EXPECT_EQ(st.by_shape.size(), ex::shapes_of(n).size());
    EXPECT_EQ(st.block_of_element1_size_hist[0], 0);
    for (int k = 1; k <= n; ++k) {
      EXPECT_EQ(st.block_of_element1_size_hist[static_cast<std::size_t>(k)],
                bell::binomial(n - 1, k - 1) * bells[static_cast<std::size_t>(n - k)]);
    }
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(st.singleton_count_hist[static_cast<std::size_t>(k)],
                bell::binomial(n, k) * beta[static_cast<std::size_t>(n - k)]);
    }
  }
  EXPECT_THROW(orc::collect_stats(orc::kStatsCap + 1), std::out_of_range);
}

TEST(Genjiko, FiftyTwoPatterns) {
  const auto g = orc::genjiko_patterns();
  ASSERT_EQ(g.size(), 52u);
  EXPECT_EQ(g.front().index, 1);
  EXPECT_EQ(g.back().index, 52);
  EXPECT_EQ(std::vector<int>(g.front().rgs.codes().begin(), g.front().rgs.codes().end()),
            (std::vector<int>{0, 0, 0, 0, 0}));
  EXPECT_EQ(std::vector<int>(g.back().rgs.codes().begin(), g.back().rgs.codes().end()),
            (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(g.front().groups, (std::vector<std::vector<int>>{{1, 2, 3, 4, 5}}));
  EXPECT_EQ(g.back().groups.size(), 5u);
  std::map<int, int> by_blocks;
  for (const auto& p : g) ++by_blocks[p.rgs.block_count()];
  EXPECT_EQ(by_blocks, (std::map<int, int>{{1, 1}, {2, 15}, {3, 25}, {4, 10}, {5, 1}}));
}

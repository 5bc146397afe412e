#include <gtest/gtest.h>

#include "coxconn/enumeration.hpp"
#include "coxconn/error.hpp"
#include "oracles.hpp"

using namespace coxconn;

TEST(ClassicalOrder, Values) {
  EXPECT_EQ(24u, classical_order(GroupType::A, 4));
  EXPECT_EQ(48u, classical_order(GroupType::B, 3));
  EXPECT_EQ(192u, classical_order(GroupType::D, 4));
  EXPECT_THROW(classical_order(GroupType::A, 30), Error);
}

TEST(CountByConnectivity, SmallCases) {
  EXPECT_EQ((std::vector<std::uint64_t>{3, 2, 1}), count_by_connectivity(GroupType::A, 3));
  EXPECT_EQ((std::vector<std::uint64_t>{5, 2, 1}), count_by_connectivity(GroupType::B, 2));
  EXPECT_EQ((std::vector<std::uint64_t>{1}), count_by_connectivity(GroupType::A, 1));
  EXPECT_THROW(count_by_connectivity(GroupType::B, 6, 1000), Error);
}

TEST(CountByConnectivity, MatchesWindowSearch) {
  for (auto [type, n] : {std::pair{GroupType::A, 5u}, std::pair{GroupType::B, 4u}, std::pair{GroupType::D, 4u}}) {
    std::vector<std::uint64_t> expected(classical_rank(type, n) + 1);
    const GeneratorSet all = GeneratorSet::full(classical_rank(type, n));
    for (const auto& [w, data] : oracle::window_bfs(type, n)) ++expected[(all - data.support).size()];
    EXPECT_EQ(expected, count_by_connectivity(type, n));
  }
}

TEST(CountTable, Rows) {
  const CountTable t = count_table(GroupType::D, 4);
  ASSERT_EQ(5u, t.rows.size());
  EXPECT_TRUE(t.rows[0].empty());
  EXPECT_TRUE(t.rows[1].empty());
  EXPECT_EQ(count_by_connectivity(GroupType::D, 3), t.rows[3]);
}

TEST(Decompose, RoundTrip) {
  const Permutation w = parse_window(GroupType::A, "2 1 3 6 4 5");
  const auto blocks = decompose_by_connectivity(w);
  ASSERT_EQ(3u, blocks.size());
  EXPECT_EQ("2 1", blocks[0].to_string());
  EXPECT_EQ("1", blocks[1].to_string());
  EXPECT_EQ("3 1 2", blocks[2].to_string());
  EXPECT_EQ(w, concatenate_blocks(blocks));

  for_each_window(GroupType::A, 5, [](const Window& v) {
    const auto parts = decompose_by_connectivity(v);
    EXPECT_EQ(connectivity_a(v).size() + 1, parts.size());
    for (const auto& p : parts) EXPECT_TRUE(connectivity_a(p).empty());
    EXPECT_EQ(v, concatenate_blocks(parts));
  });
}

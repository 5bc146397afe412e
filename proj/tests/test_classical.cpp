#include <gtest/gtest.h>

#include "coxconn/classical.hpp"
#include "coxconn/error.hpp"
#include "oracles.hpp"

using namespace coxconn;

namespace {

std::vector<int> entries(const Window& w) { return {w.entries().begin(), w.entries().end()}; }

void expect_connectivity_matches_oracle(GroupType type, unsigned n) {
  const GeneratorSet all = GeneratorSet::full(classical_rank(type, n));
  for (const auto& [window, data] : oracle::window_bfs(type, n)) {
    EXPECT_EQ(all - data.support, connectivity(Window(type, window)))
        << to_char(type) << n << " " << Window(type, window).to_string();
  }
}

}  // namespace

TEST(Window, Validation) {
  EXPECT_THROW(Window(GroupType::A, {1, 1, 2}), Error);
  EXPECT_THROW(Window(GroupType::A, {0, 1}), Error);
  EXPECT_THROW(Window(GroupType::A, {-1, 2}), Error);
  EXPECT_THROW(Window(GroupType::B, {1, 3}), Error);
  EXPECT_THROW(Window(GroupType::D, {-1, 2, 3}), Error);
  EXPECT_NO_THROW(Window(GroupType::B, {-1, 2, 3}));
  EXPECT_NO_THROW(Window(GroupType::D, {-1, -2, 3}));
  try {
    Window(GroupType::D, {-1, 2});
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::InvalidWindow, e.code());
  }
}

TEST(Window, ParseAndPrint) {
  EXPECT_EQ(Window(GroupType::B, {-2, -1, 3}), parse_window(GroupType::B, "-2 -1 3"));
  EXPECT_EQ(Window(GroupType::A, {2, 1, 3}), parse_window(GroupType::A, "2,1,3"));
  EXPECT_EQ("-2 -1 3", parse_window(GroupType::D, " -2  -1 3 ").to_string());
  EXPECT_THROW(parse_window(GroupType::A, "2 x 1"), Error);
  EXPECT_THROW(parse_window(GroupType::A, ""), Error);
  EXPECT_EQ(GroupType::B, parse_group_type("B"));
  EXPECT_THROW(parse_group_type("C"), Error);
}

TEST(Window, SignedAccessAndProducts) {
  const Window w(GroupType::B, {-2, 3, 1});
  EXPECT_EQ(2, w(-1));
  EXPECT_EQ(-3, w(-2));
  EXPECT_EQ(-1, w.preimage(2));
  EXPECT_EQ(3, w.preimage(1));
  EXPECT_EQ(1u, w.negative_count());
  EXPECT_EQ(Window::identity(GroupType::B, 3), w * w.inverse());
  const Window v(GroupType::B, {3, -1, 2});
  const Window uv = w * v;
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(w(v(i)), uv(i));
}

TEST(Window, GeneratorActions) {
  // τ_i swaps positions i and i+1 on the right.
  EXPECT_EQ("1 3 2 4", Window::identity(GroupType::A, 4).right_multiply(1).to_string());
  EXPECT_EQ("-1 2 3", Window::identity(GroupType::B, 3).right_multiply(0).to_string());
  EXPECT_EQ("2 1 3", Window::identity(GroupType::B, 3).right_multiply(1).to_string());
  EXPECT_EQ("-2 -1 3", Window::identity(GroupType::D, 3).right_multiply(0).to_string());
  EXPECT_EQ("1 3 2", Window::identity(GroupType::D, 3).right_multiply(2).to_string());
}

TEST(Window, WorkedProducts) {
  // s2 s1 = 3124 and s2 s3 = 1342 as products of transpositions.
  const Window e = Window::identity(GroupType::A, 4);
  EXPECT_EQ("3 1 2 4", e.right_multiply(1).right_multiply(0).to_string());
  EXPECT_EQ("1 3 4 2", e.right_multiply(1).right_multiply(2).to_string());
}

TEST(Window, Inversions) {
  EXPECT_EQ(0u, Window::identity(GroupType::A, 5).inversions());
  EXPECT_EQ(6u, parse_window(GroupType::A, "4 3 2 1").inversions());
  EXPECT_EQ(4u, parse_window(GroupType::A, "2 4 3 1").inversions());
}

TEST(Connectivity, Examples) {
  EXPECT_EQ((GeneratorSet{1, 2}), connectivity_a(parse_window(GroupType::A, "2 1 3 4")));
  EXPECT_EQ(GeneratorSet{}, connectivity_a(parse_window(GroupType::A, "4 3 2 1")));
  EXPECT_EQ((GeneratorSet{0, 1}), connectivity_a(parse_window(GroupType::A, "1 2 4 3")));
  EXPECT_EQ((GeneratorSet{0, 2}), connectivity_b(parse_window(GroupType::B, "2 1 3")));
  EXPECT_EQ((GeneratorSet{0, 2}), connectivity_d(parse_window(GroupType::D, "2 1 3")));
  EXPECT_EQ((GeneratorSet{1, 2}), connectivity_d(parse_window(GroupType::D, "-2 -1 3")));
  EXPECT_EQ((GeneratorSet{1, 2}), connectivity_b(parse_window(GroupType::B, "-1 2 3")));
  EXPECT_EQ(GeneratorSet::full(3), connectivity(Window::identity(GroupType::D, 3)));
}

TEST(Connectivity, MatchesWindowSearch) {
  for (unsigned n = 1; n <= 6; ++n) expect_connectivity_matches_oracle(GroupType::A, n);
  for (unsigned n = 1; n <= 4; ++n) expect_connectivity_matches_oracle(GroupType::B, n);
  for (unsigned n = 2; n <= 5; ++n) expect_connectivity_matches_oracle(GroupType::D, n);
}

TEST(Standardize, Examples) {
  EXPECT_EQ("2 1 3", standardize("bac").to_string());
  EXPECT_EQ("1 3 2 4", standardize("adbz").to_string());
  EXPECT_EQ("1 2", standardize("aa").to_string());
  const std::vector<int> word{7, -3, 9, 0};
  EXPECT_EQ("3 1 4 2", standardize(std::span<const int>(word)).to_string());
}

TEST(Standardize, MatchesSearchOnDistinctWords) {
  const std::vector<std::vector<int>> words{{5, 1, 9, 3}, {2}, {10, 20, 0, -5, 7}, {3, 2, 1}};
  for (const auto& w : words) {
    EXPECT_EQ(oracle::standardize_by_search(w), entries(standardize(std::span<const int>(w))));
  }
}

TEST(StandardizeBlocks, Examples) {
  const Permutation w = parse_window(GroupType::A, "4 3 2 1");
  EXPECT_EQ("2 1 4 3", standardize_blocks(w, {1}).to_string());  // cut after position 2
  EXPECT_EQ(w, standardize_blocks(w, {}));
  EXPECT_EQ(Window::identity(GroupType::A, 4), standardize_blocks(w, GeneratorSet::full(3)));
  EXPECT_EQ("1 4 2 3 6 5",
            standardize_blocks(parse_window(GroupType::A, "4 6 2 3 5 1"), {0, 3}).to_string());
}

TEST(Composition, Parts) {
  EXPECT_EQ((Composition{{2, 2}}), composition_of({1}, 4));
  EXPECT_EQ((Composition{{4}}), composition_of({}, 4));
  EXPECT_EQ((Composition{{1, 3, 2}}), composition_of({0, 3}, 6));
}

TEST(ForEachWindow, Counts) {
  std::size_t a = 0, b = 0, d = 0;
  for_each_window(GroupType::A, 4, [&](const Window&) { ++a; });
  for_each_window(GroupType::B, 3, [&](const Window&) { ++b; });
  for_each_window(GroupType::D, 4, [&](const Window&) { ++d; });
  EXPECT_EQ(24u, a);
  EXPECT_EQ(48u, b);
  EXPECT_EQ(192u, d);
}

TEST(TypedIndex, RoundTripAndLength) {
  for (auto [type, n] : {std::pair{GroupType::A, 4u}, std::pair{GroupType::B, 3u},
                         std::pair{GroupType::D, 4u}, std::pair{GroupType::D, 2u}}) {
    const ClassicalGroup g(type, n);
    const auto bfs = oracle::window_bfs(type, n);
    ASSERT_EQ(bfs.size(), g.table().size());
    for (std::size_t i = 0; i < g.table().size(); ++i) {
      const Element e = g.table().element(i);
      const Window& w = g.window(e);
      EXPECT_EQ(e, g.element(w));
      const auto& data = bfs.at(entries(w));
      EXPECT_EQ(data.length, g.table().length(e));
      EXPECT_EQ(data.support, g.table().support(e));
      for (Generator s = 0; s < g.table().rank(); ++s) {
        EXPECT_EQ(w.right_multiply(s), g.window(g.table().right_multiply(e, s)));
      }
    }
  }
}

TEST(TypedIndex, RejectsWrongWindows) {
  const ClassicalGroup g(GroupType::A, 3);
  EXPECT_THROW(g.element("1 2 3 4"), Error);
  EXPECT_THROW(g.element(Window::identity(GroupType::B, 3)), Error);
  const GroupTable b3 = build_group_table(classical_matrix(GroupType::B, 3));
  EXPECT_THROW(TypedIndex(b3, GroupType::D, 3), Error);
}

#include <gtest/gtest.h>

#include <sstream>

#include "coxconn/classical.hpp"
#include "coxconn/error.hpp"
#include "coxconn/group_table.hpp"
#include "oracles.hpp"

using namespace coxconn;

namespace {

std::vector<Element> elements_of(const GroupTable& t) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t.element(i));
  return out;
}

CoxeterMatrix matrix_from_text(const std::string& text) {
  std::istringstream in(text);
  return CoxeterMatrix::parse(in);
}

}  // namespace

TEST(CoxeterMatrix, ValidatesEntries) {
  EXPECT_THROW(CoxeterMatrix(2, {1, 3, 2, 1}), Error);  // asymmetric
  EXPECT_THROW(CoxeterMatrix(2, {2, 3, 3, 1}), Error);  // bad diagonal
  EXPECT_THROW(CoxeterMatrix(2, {1, 1, 1, 1}), Error);  // m = 1 off the diagonal
  EXPECT_THROW(CoxeterMatrix(0, {}), Error);
  EXPECT_NO_THROW(CoxeterMatrix(2, {1, 0, 0, 1}));  // m = ∞
  try {
    CoxeterMatrix(2, {1, 3, 2, 1});
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::InvalidMatrix, e.code());
  }
}

TEST(CoxeterMatrix, ParsesFileFormatAndNames) {
  const auto m = matrix_from_text("3\n1 3 2\n3 1 3\n2 3 1\n");
  EXPECT_EQ(CoxeterMatrix::type_a(3), m);
  EXPECT_EQ(CoxeterMatrix::type_b(4), CoxeterMatrix::from_name("B4"));
  EXPECT_EQ(4u, CoxeterMatrix::type_b(3)(0, 1));
  EXPECT_EQ(3u, CoxeterMatrix::type_d(4)(0, 2));
  EXPECT_EQ(2u, CoxeterMatrix::type_d(4)(0, 1));
  EXPECT_THROW(matrix_from_text("2\n1 3\n3"), Error);
  EXPECT_THROW(matrix_from_text("2\n1 x\n3 1"), Error);
  EXPECT_THROW(CoxeterMatrix::from_name("E6"), Error);

  std::ostringstream out;
  out << m;
  EXPECT_EQ(m, matrix_from_text(out.str()));
}

TEST(BuildGroupTable, Sizes) {
  EXPECT_EQ(2u, build_group_table(CoxeterMatrix(1, {1})).size());
  EXPECT_EQ(24u, build_group_table(CoxeterMatrix::type_a(3)).size());
  // 2^3 · 3! = 48
  EXPECT_EQ(48u, build_group_table(CoxeterMatrix::type_b(3)).size());
  EXPECT_EQ(192u, build_group_table(CoxeterMatrix::type_d(4)).size());
  EXPECT_EQ(14u, build_group_table(CoxeterMatrix(2, {1, 7, 7, 1})).size());
  // H3, F4
  EXPECT_EQ(120u, build_group_table(CoxeterMatrix(3, {1, 5, 2, 5, 1, 3, 2, 3, 1})).size());
  EXPECT_EQ(1152u, build_group_table(matrix_from_text("4\n1 3 2 2\n3 1 4 2\n2 4 1 3\n2 2 3 1\n")).size());
}

TEST(BuildGroupTable, CapAndInfiniteGroups) {
  try {
    build_group_table(CoxeterMatrix::type_a(4), 100);
    FAIL() << "expected GroupTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(ErrorCode::GroupTooLarge, e.code());
  }
  EXPECT_NO_THROW(build_group_table(CoxeterMatrix::type_a(4), 120));
  // Affine Ã2 and the infinite dihedral group.
  EXPECT_THROW(build_group_table(CoxeterMatrix(3, {1, 3, 3, 3, 1, 3, 3, 3, 1}), 5000), Error);
  EXPECT_THROW(build_group_table(CoxeterMatrix(2, {1, 0, 0, 1}), 5000), Error);
}

TEST(BuildGroupTable, TableLaws) {
  for (const auto& m : {CoxeterMatrix::type_a(3), CoxeterMatrix::type_b(3), CoxeterMatrix::type_d(4)}) {
    const GroupTable t = build_group_table(m);
    EXPECT_EQ(0u, t.length(t.identity()));
    for (Element w : elements_of(t)) {
      EXPECT_EQ(descent_set(t, w), t.descents(w));
      EXPECT_EQ(support(t, w), t.support(w));
      for (Generator s = 0; s < t.rank(); ++s) {
        const Element ws = t.right_multiply(w, s);
        EXPECT_EQ(1, std::abs(int(t.length(ws)) - int(t.length(w))));
        EXPECT_EQ(w, t.right_multiply(ws, s));
      }
    }
  }
}

TEST(Length, MatchesInversionsAndWindowSearch) {
  const ClassicalGroup s4(GroupType::A, 4);
  for (std::size_t i = 0; i < s4.table().size(); ++i) {
    const Element e = s4.table().element(i);
    EXPECT_EQ(s4.window(e).inversions(), s4.table().length(e));
  }
  EXPECT_EQ(0u, s4.table().length(s4.element("1 2 3 4")));
  EXPECT_EQ(6u, s4.table().length(s4.element("4 3 2 1")));

  const GroupTable b2 = build_group_table(CoxeterMatrix::type_b(2));
  const std::vector<Generator> word{0, 1, 0};
  EXPECT_EQ(3u, b2.length(from_word(b2, word)));

  for (auto [type, n] : {std::pair{GroupType::B, 3u}, std::pair{GroupType::D, 4u}}) {
    const ClassicalGroup g(type, n);
    const auto bfs = oracle::window_bfs(type, n);
    ASSERT_EQ(bfs.size(), g.table().size());
    for (const auto& [window, data] : bfs) {
      EXPECT_EQ(data.length, g.table().length(g.element(Window(type, window))));
    }
  }
}

TEST(DescentSet, Examples) {
  const ClassicalGroup s4(GroupType::A, 4);
  const auto& t = s4.table();
  EXPECT_TRUE(descent_set(t, t.identity()).empty());
  EXPECT_EQ(t.generators(), descent_set(t, s4.element("4 3 2 1")));
  EXPECT_EQ(GeneratorSet{0}, descent_set(t, s4.element("2 1 3 4")));  // τ1
}

TEST(ReducedWord, Examples) {
  const ClassicalGroup s4(GroupType::A, 4);
  EXPECT_TRUE(reduced_word(s4.table(), s4.table().identity()).empty());
  EXPECT_EQ(std::vector<Generator>{0}, reduced_word(s4.table(), s4.element("2 1 3 4")));

  // 321 → 231 → 213 → 123 strips τ1, τ2, τ1.
  const ClassicalGroup s3(GroupType::A, 3);
  EXPECT_EQ((std::vector<Generator>{0, 1, 0}), reduced_word(s3.table(), s3.element("3 2 1")));
}

TEST(ReducedWord, IsReducedAndEvaluatesBack) {
  const GroupTable t = build_group_table(CoxeterMatrix::type_b(3));
  for (Element w : elements_of(t)) {
    for (auto rule : {DescentRule::Smallest, DescentRule::Largest}) {
      const auto word = reduced_word(t, w, rule);
      EXPECT_EQ(t.length(w), word.size());
      EXPECT_EQ(w, from_word(t, word));
    }
  }
}

TEST(SupportAndConnectivity, Examples) {
  const ClassicalGroup s4(GroupType::A, 4);
  const auto& t = s4.table();
  EXPECT_TRUE(support(t, t.identity()).empty());
  EXPECT_EQ(t.generators(), support(t, s4.element("4 3 2 1")));
  EXPECT_EQ(GeneratorSet{0}, support(t, s4.element("2 1 3 4")));

  EXPECT_EQ(t.generators(), connectivity_set(t, t.identity()));
  EXPECT_EQ((GeneratorSet{1, 2}), connectivity_set(t, s4.element("2 1 3 4")));  // {τ2, τ3}
  for (GroupType type : {GroupType::A, GroupType::B, GroupType::D}) {
    const GroupTable g = build_group_table(classical_matrix(type, 4));
    EXPECT_TRUE(connectivity_set(g, longest_element(g, g.generators())).empty());
  }
}

TEST(LongestElement, Examples) {
  const ClassicalGroup s4(GroupType::A, 4);
  EXPECT_EQ(s4.table().identity(), longest_element(s4.table(), {}));
  EXPECT_EQ(s4.element("3 2 1 4"), longest_element(s4.table(), {0, 1}));
  const ClassicalGroup s3(GroupType::A, 3);
  EXPECT_EQ(s3.element("3 2 1"), longest_element(s3.table(), s3.table().generators()));

  const GroupTable b3 = build_group_table(CoxeterMatrix::type_b(3));
  for_each_between(GeneratorSet{}, b3.generators(), [&](GeneratorSet k) {
    const Element w0 = longest_element(b3, k);
    EXPECT_EQ(k, b3.descents(w0));
    EXPECT_TRUE(b3.support(w0).subset_of(k));
  });
}

TEST(ParabolicDecompose, TrivialIndexSets) {
  const GroupTable t = build_group_table(CoxeterMatrix::type_d(4));
  for (Element w : elements_of(t)) {
    const auto none = parabolic_decompose(t, w, {});
    EXPECT_EQ(w, none.coset_part);
    EXPECT_EQ(t.identity(), none.parabolic_part);
    const auto all = parabolic_decompose(t, w, t.generators());
    EXPECT_EQ(t.identity(), all.coset_part);
    EXPECT_EQ(w, all.parabolic_part);
  }
}

TEST(ParabolicDecompose, StandardizationExample) {
  // I = S \ {τ1, τ4}
  const ClassicalGroup s6(GroupType::A, 6);
  const GeneratorSet i = s6.table().generators() - GeneratorSet{0, 3};
  const auto parts = parabolic_decompose(s6.table(), s6.element("4 6 2 3 5 1"), i);
  EXPECT_EQ("1 4 2 3 6 5", s6.window(parts.parabolic_part).to_string());
  EXPECT_EQ(s6.element("4 6 2 3 5 1"), multiply(s6.table(), parts.coset_part, parts.parabolic_part));
  EXPECT_TRUE((s6.table().descents(parts.coset_part) & i).empty());
}

TEST(ParabolicDecompose, ProductAndLengthsOnB3) {
  const GroupTable t = build_group_table(CoxeterMatrix::type_b(3));
  for_each_between(GeneratorSet{}, t.generators(), [&](GeneratorSet i) {
    for (Element w : elements_of(t)) {
      const auto [x, y] = parabolic_decompose(t, w, i);
      EXPECT_EQ(w, multiply(t, x, y));
      EXPECT_EQ(t.length(w), t.length(x) + t.length(y));
      EXPECT_TRUE(t.support(y).subset_of(i));
      EXPECT_TRUE((t.descents(x) & i).empty());
    }
  });
}

TEST(GroupOps, MultiplyInverseParabolicOrder) {
  const GroupTable t = build_group_table(CoxeterMatrix::type_a(3));
  for (Element w : elements_of(t)) {
    EXPECT_EQ(t.identity(), multiply(t, w, inverse(t, w)));
    EXPECT_EQ(t.length(w), t.length(inverse(t, w)));
  }
  EXPECT_EQ(24u, parabolic_order(t, t.generators()));
  EXPECT_EQ(6u, parabolic_order(t, {0, 1}));
  EXPECT_EQ(4u, parabolic_order(t, {0, 2}));
  EXPECT_THROW(t.element(24), Error);
}

#include <gtest/gtest.h>

#include <algorithm>

#include "hyperdet/mdmatrix.hpp"
#include "support.hpp"

using namespace hyperdet;

TEST(Format, Classification) {
  EXPECT_EQ(classify_format({2, 2, 3}), (FormatClass{FormatKind::Boundary, 2}));
  EXPECT_EQ(classify_format({2, 2, 2}).kind, FormatKind::Inner);
  EXPECT_EQ(classify_format({2, 2, 5}), (FormatClass{FormatKind::Grassman, 2}));
  EXPECT_EQ(classify_format({3, 3}).kind, FormatKind::Square2D);
  EXPECT_EQ(classify_format({3, 1, 3}).kind, FormatKind::Square2D);
  EXPECT_EQ(classify_format({1, 1}).kind, FormatKind::Square2D);
  EXPECT_EQ(classify_format({2, 3}).kind, FormatKind::Grassman);
  EXPECT_EQ(classify_format({4}).kind, FormatKind::Grassman);
  EXPECT_EQ(classify_format({2, 3, 4}), (FormatClass{FormatKind::Boundary, 2}));
  EXPECT_EQ(classify_format({2, 2, 2, 4}), (FormatClass{FormatKind::Boundary, 3}));
  EXPECT_EQ(classify_format({3, 3, 3}).kind, FormatKind::Inner);
  EXPECT_ERROR_KIND(Format({2, 0}), ErrorKind::WrongFormat);
}

TEST(Format, ClassificationIsPermutationInvariant) {
  for (std::vector<int> dims : {std::vector<int>{2, 2, 3}, {2, 3, 4}, {2, 2, 5}, {3, 3, 2}, {2, 2, 2, 4}, {2, 3, 3, 3}}) {
    const FormatKind kind = classify_format(Format(dims)).kind;
    std::sort(dims.begin(), dims.end());
    do {
      EXPECT_EQ(classify_format(Format(dims)).kind, kind);
    } while (std::next_permutation(dims.begin(), dims.end()));
  }
}

TEST(Format, MSequence) {
  EXPECT_EQ(m_sequence({2, 2, 2}), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(m_sequence({7}), (std::vector<int>{1, 7}));
  EXPECT_EQ(m_sequence({2, 3}), (std::vector<int>{1, 2, 4}));
  for (const Format& f : {Format{2, 5, 3}, Format{4, 1, 6, 2}}) {
    const auto m = m_sequence(f);
    int sum = 0;
    for (int n : f.dims()) sum += n;
    EXPECT_EQ(m.back(), 1 + sum - static_cast<int>(f.arity()));
    EXPECT_EQ(m[f.arity()] - m[f.arity() - 1], f[f.arity() - 1] - 1);
  }
}

TEST(MDMatrix, OffsetsFollowRowMajorOrder) {
  const MDMatrix a = MDMatrix::symbolic({2, 3, 4});
  const std::vector<int> idx{2, 1, 3};
  EXPECT_EQ(a.offset(idx), ((1u * 3 + 0) * 4) + 2);
  EXPECT_EQ(a.index_of(a.offset(idx)), idx);
  EXPECT_ERROR_KIND(a.offset(std::vector<int>{3, 1, 1}), ErrorKind::IndexOutOfRange);
}

TEST(MDMatrix, SymbolicHasDistinctVariables) {
  const MDMatrix a = MDMatrix::symbolic({2, 2});
  std::vector<Polynomial> e = a.polys();
  EXPECT_EQ(e.size(), 4u);
  std::sort(e.begin(), e.end(), [](const Polynomial& x, const Polynomial& y) { return x.to_string() < y.to_string(); });
  EXPECT_EQ(std::unique(e.begin(), e.end()), e.end());
}

TEST(MDMatrix, SliceOfSymbolicCube) {
  const MDMatrix s = MDMatrix::symbolic({2, 2, 2}).slice(2, 1);
  EXPECT_EQ(s.format(), (Format{2, 2}));
  EXPECT_EQ(s.polys(), (std::vector<Polynomial>{P("a[1,1,1]"), P("a[1,2,1]"), P("a[2,1,1]"), P("a[2,2,1]")}));
  EXPECT_ERROR_KIND(MDMatrix::symbolic({2, 2, 2}).slice(2, 3), ErrorKind::IndexOutOfRange);
}

TEST(MDMatrix, SlicesPartitionTheMatrix) {
  const MDMatrix a = MDMatrix::random_integer({2, 3, 4}, 4, 10);
  for (std::size_t k = 0; k < 3; ++k) {
    std::size_t covered = 0;
    for (int i = 1; i <= a.format()[k]; ++i) {
      const MDMatrix s = a.slice(k, i);
      covered += s.size();
      for (std::size_t off = 0; off < s.size(); ++off) {
        auto idx = s.index_of(off);
        idx.insert(idx.begin() + static_cast<std::ptrdiff_t>(k), i);
        EXPECT_EQ(s.values()[off], a.value(idx));
      }
    }
    EXPECT_EQ(covered, a.size());
  }
}

TEST(MDMatrix, Subtensor) {
  const MDMatrix a = MDMatrix::random_integer({2, 2, 5}, 1, 10);
  EXPECT_EQ(a.subtensor({{1, 2}, {1, 2}, {1, 2, 3, 4, 5}}), a);
  const MDMatrix s = a.subtensor({{1, 2}, {1, 2}, {1, 3, 4}});
  EXPECT_EQ(s.format(), (Format{2, 2, 3}));
  EXPECT_EQ(s.value(std::vector<int>{2, 1, 2}), a.value(std::vector<int>{2, 1, 3}));
  const MDMatrix one = a.subtensor({{2}, {1}, {5}});
  EXPECT_EQ(one.format(), (Format{1, 1, 1}));
  EXPECT_EQ(one.values()[0], a.value(std::vector<int>{2, 1, 5}));
  EXPECT_ERROR_KIND(a.subtensor({{}, {1}, {1}}), ErrorKind::EmptySelection);
  EXPECT_ERROR_KIND(a.subtensor({{3}, {1}, {1}}), ErrorKind::IndexOutOfRange);
}

TEST(MDMatrix, SliceCommutesWithSubtensor) {
  const MDMatrix a = MDMatrix::random_integer({3, 3, 4}, 8, 10);
  const MDMatrix lhs = a.subtensor({{1, 3}, {2}, {1, 2, 4}}).slice(1, 1);
  const MDMatrix rhs = a.slice(1, 2).subtensor({{1, 3}, {1, 2, 4}});
  EXPECT_EQ(lhs, rhs);
}

TEST(MDMatrix, PermutedAxes) {
  const MDMatrix a = MDMatrix::symbolic({2, 3, 4});
  const MDMatrix b = a.permuted({2, 0, 1});
  EXPECT_EQ(b.format(), (Format{4, 2, 3}));
  EXPECT_EQ(b.polys()[b.offset(std::vector<int>{4, 1, 3})], P("a[1,3,4]"));
}

TEST(MDMatrix, RandomIsReproducible) {
  const MDMatrix a = MDMatrix::random_integer({2, 2, 3}, 42, 10);
  EXPECT_EQ(a, MDMatrix::random_integer({2, 2, 3}, 42, 10));
  EXPECT_NE(a, MDMatrix::random_integer({2, 2, 3}, 43, 10));
  for (const auto& v : a.values()) {
    EXPECT_LE(abs(v), 10);
    EXPECT_TRUE(is_integral(v));
  }
}

TEST(MinorSubformats, Counts) {
  const auto cube = enumerate_minor_subformats({2, 2, 2});
  EXPECT_EQ(cube.size(), 15u);
  EXPECT_EQ(std::count_if(cube.begin(), cube.end(), [](const auto& m) { return m.format.volume() == 1; }), 8);
  EXPECT_EQ(std::count_if(cube.begin(), cube.end(), [](const auto& m) { return m.format.volume() == 4; }), 6);
  EXPECT_EQ(cube.back().format, (Format{2, 2, 2}));
  EXPECT_EQ(enumerate_minor_subformats({2, 2}).size(), 5u);
  EXPECT_EQ(enumerate_minor_subformats({1, 6}).size(), 6u);
}

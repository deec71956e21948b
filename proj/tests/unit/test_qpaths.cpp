#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hyperdet/qpaths.hpp"
#include "support.hpp"

using namespace hyperdet;

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

QSeq worked_seq() { return QSeq{{{1}, {3}, {2}, {2}}}; }
const Format kWorkedFormat{2, 2, 2, 2};

}  // namespace

TEST(Subsets, DescendingColexOrder) {
  EXPECT_EQ(enumerate_subsets(3, 1), (std::vector<Subset>{{1}, {2}, {3}}));
  EXPECT_EQ(enumerate_subsets(4, 2), (std::vector<Subset>{{1, 2}, {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}}));
  const auto s = enumerate_subsets(6, 3);
  EXPECT_EQ(s.size(), 20u);
  for (std::size_t i = 1; i < s.size(); ++i) EXPECT_TRUE(colex_less(s[i - 1], s[i]));
}

TEST(EnumerateC, Cardinalities) {
  for (int n = 1; n <= 6; ++n) EXPECT_EQ(enumerate_C(Format{n}).size(), static_cast<std::size_t>(n));
  EXPECT_EQ(enumerate_C(boundary_base({2, 2, 3})).size(), 6u);
  const auto c = enumerate_C({2, 2, 2});
  EXPECT_EQ(c.size(), 24u);
  EXPECT_EQ(c.front().q.size(), 3u);
}

TEST(EnumerateC, CountLawExhaustive) {
  for (const Format& f : {Format{2, 2, 2}, Format{3, 2}, Format{2, 3}, Format{4, 3}, Format{2, 2, 3},
                          Format{3, 3, 2}, Format{2, 2, 2, 2}, Format{5, 4}, Format{8}}) {
    const auto m = m_sequence(f);
    ASSERT_LE(m.back(), 8);
    long expected = factorial(m.back());
    for (int n : f.dims()) expected /= factorial(n - 1);
    const auto c = enumerate_C(f);
    EXPECT_EQ(static_cast<long>(c.size()), expected) << f.to_string();
    std::set<std::vector<Subset>> distinct;
    for (const auto& q : c) distinct.insert(q.q);
    EXPECT_EQ(distinct.size(), c.size());
  }
}

TEST(EnumerateC, SizeGuard) { EXPECT_ERROR_KIND(enumerate_C({4, 4, 4}, 1000), ErrorKind::SizeGuard); }

TEST(OrderIso, Examples) {
  EXPECT_EQ(order_iso({}, 3, 3), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(order_iso({2}, 2, 3), (std::vector<int>{1, 3}));
  EXPECT_ERROR_KIND(order_iso({2}, 3, 3), ErrorKind::SizeMismatch);
}

TEST(OrderIso, ArrowsOfTheWorkedExample) {
  EXPECT_EQ(order_iso({1}, 1, 2), (std::vector<int>{2}));
  EXPECT_EQ(order_iso({3}, 2, 3), (std::vector<int>{1, 2}));
  EXPECT_EQ(order_iso({2}, 3, 4), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(order_iso({2}, 4, 5), (std::vector<int>{1, 3, 4, 5}));
}

TEST(QPath, WorkedExample) {
  EXPECT_EQ(q_path(kWorkedFormat, worked_seq()), (QPath{1, 2, 2, 3, 4}));
  EXPECT_EQ(j_of(kWorkedFormat, worked_seq()), 4);
  EXPECT_EQ(path_over_diagram(kWorkedFormat, worked_seq(), initial_diagram(kWorkedFormat, worked_seq())), (std::vector<int>{2, 1, 2, 2}));
}

TEST(QPath, TopCutsKeepThePathAtTheBottom) {
  const Format f{3, 2, 4};
  const auto m = m_sequence(f);
  QSeq q;
  for (std::size_t k = 1; k <= f.arity(); ++k) {
    Subset s;
    for (int x = m[k] - f[k - 1] + 2; x <= m[k]; ++x) s.push_back(x);
    q.q.push_back(s);
  }
  EXPECT_EQ(q_path(f, q), (QPath{1, 1, 1, 1}));
  EXPECT_EQ(j_of(f, q), 1);
}

TEST(QPath, OneDimensionalIdentifiesQWithJ) {
  for (int j = 1; j <= 5; ++j) {
    Subset s;
    for (int x = 1; x <= 5; ++x)
      if (x != j) s.push_back(x);
    const QSeq q{{s}};
    EXPECT_EQ(j_of(Format{5}, q), j);
    EXPECT_EQ(path_over_diagram(Format{5}, q, initial_diagram(Format{5}, q)), (std::vector<int>{j}));
    EXPECT_EQ(admissible_maps(s, 1, 5, 5).size(), 1u);
  }
}

TEST(QPath, PathsIncreaseAndEndInRange) {
  for (const Format& f : {Format{2, 2, 2}, Format{2, 3}, Format{3, 2, 2}}) {
    const auto m = m_sequence(f);
    for (const auto& q : enumerate_C(f)) {
      const QPath p = q_path(f, q);
      for (std::size_t k = 1; k < p.size(); ++k) EXPECT_GE(p[k], p[k - 1]);
      EXPECT_GE(p.back(), 1);
      EXPECT_LE(p.back(), m.back());
    }
  }
}

TEST(Blocks, Examples) {
  EXPECT_EQ(blocks({2}, 3, 2), (std::vector<std::vector<int>>{{1}, {3}}));
  EXPECT_EQ(blocks({1}, 3, 2), (std::vector<std::vector<int>>{{}, {2, 3}}));
}

TEST(Blocks, SizesSumToPreviousLevel) {
  for (const Format& f : {Format{2, 2, 2}, Format{2, 3, 2}, Format{3, 3}}) {
    const auto m = m_sequence(f);
    for (const auto& q : enumerate_C(f))
      for (std::size_t k = 1; k <= f.arity(); ++k) {
        std::size_t total = 0;
        for (const auto& r : blocks(q.q[k - 1], m[k], f[k - 1])) total += r.size();
        EXPECT_EQ(static_cast<int>(total), m[k - 1]);
      }
  }
}

TEST(Diagram, InitialRowsOfTheWorkedExample) {
  const QDiagram g = initial_diagram(kWorkedFormat, worked_seq());
  EXPECT_EQ(g.g, (std::vector<std::vector<int>>{{2}, {1, 1}, {1, 2, 2}, {1, 2, 2, 2}}));
}

TEST(Diagram, InducedMapErrors) {
  EXPECT_EQ(induced_map({1, 3}, {2}, 3, 2), (std::vector<int>{1, 2}));
  EXPECT_ERROR_KIND(induced_map({1, 1}, {2}, 3, 2), ErrorKind::NotInjective);
  EXPECT_ERROR_KIND(induced_map({1, 2}, {2}, 3, 2), ErrorKind::RangeViolation);
}

TEST(Diagram, AdmissibleMaps) {
  EXPECT_EQ(admissible_maps({2}, 1, 3, 2), (std::vector<std::vector<int>>{{1}, {2}}));
  EXPECT_EQ(admissible_maps({2}, 1, 2, 2), (std::vector<std::vector<int>>{{1}}));
  EXPECT_ERROR_KIND(admissible_maps({2}, 30, 31, 3, 1000), ErrorKind::SizeGuard);
}

TEST(Diagram, InitialDiagramsAreAdmissible) {
  for (const Format& f : {Format{2, 2, 2}, Format{2, 3, 2}, Format{3, 2}}) {
    const auto m = m_sequence(f);
    for (const auto& q : enumerate_C(f)) {
      const QDiagram g = initial_diagram(f, q);
      for (std::size_t k = 1; k <= f.arity(); ++k) {
        const auto adm = admissible_maps(q.q[k - 1], m[k - 1], m[k], f[k - 1]);
        EXPECT_NE(std::find(adm.begin(), adm.end(), g.g[k - 1]), adm.end());
      }
    }
  }
}

TEST(Diagram, SevenPanelsOfTheCube) {
  // Panels are numbered by (q1, q2, q3) counting cuts from the top of each P_k.
  const Format f{2, 2, 2};
  const auto m = m_sequence(f);
  std::map<std::vector<int>, std::vector<int>> indices;
  for (int q3 = 1; q3 <= 4; ++q3)
    for (int q2 = 1; q2 <= 3; ++q2)
      for (int q1 = 1; q1 <= 2; ++q1) {
        const QSeq q{{{m[1] + 1 - q1}, {m[2] + 1 - q2}, {m[3] + 1 - q3}}};
        const QDiagram g = initial_diagram(f, q);
        EXPECT_EQ(g.g[0].size(), 1u);
        EXPECT_EQ(g.g[1].size(), 2u);
        EXPECT_EQ(g.g[2].size(), 3u);
        indices[{q1, q2, q3}] = path_over_diagram(f, q, g);
      }
  EXPECT_EQ(indices.size(), 24u);
  EXPECT_EQ(indices.at({1, 1, 1}), (std::vector<int>{1, 1, 1}));
}

TEST(ConjugacyClasses, CardinalitiesByExhaustion) {
  for (const Format& f : {boundary_base({2, 2, 3}), Format{2, 2, 2}, Format{2, 3}}) {
    const QSpace space(f);
    const auto m = space.mseq();
    for (std::size_t k = 0; k <= f.arity(); ++k) {
      long expected = factorial(m[k] - 1);
      for (std::size_t j = 1; j <= k; ++j) expected /= factorial(f[j - 1] - 1);
      std::set<std::size_t> tails;
      for (std::size_t q = 0; q < space.size(); ++q) tails.insert(q);
      std::set<std::vector<Subset>> seen_tails;
      for (std::size_t q = 0; q < space.size(); ++q) {
        const QSeq s = space.seq(q);
        std::vector<Subset> tail(s.q.begin() + static_cast<std::ptrdiff_t>(k), s.q.end());
        if (!seen_tails.insert(tail).second) continue;
        for (int p = 1; p <= m[k]; ++p)
          EXPECT_EQ(static_cast<long>(conj_class(f, k, tail, p).size()), expected)
              << f.to_string() << " k=" << k << " p=" << p;
      }
    }
  }
}

TEST(ConjugacyClasses, LevelsZeroAndOneAreSingletons) {
  for (const Format& f : {Format{2, 2, 2}, Format{3, 2, 2}, Format{2, 3}}) {
    const QSpace space(f);
    for (std::size_t q = 0; q < space.size(); ++q) {
      EXPECT_EQ(space.l(q, 0), 1);
      EXPECT_EQ(space.l(q, 1), 1);
    }
  }
}

TEST(ConjugacyClasses, TopLevelClassesCoverC) {
  const Format f{2, 2, 2};
  std::size_t total = 0;
  for (int p = 1; p <= 4; ++p) total += conj_class(f, 3, {}, p).size();
  EXPECT_EQ(total, enumerate_C(f).size());
}

TEST(ConjugacyClasses, LSequenceIsPositionInClass) {
  const Format f{2, 2, 2};
  for (const auto& q : enumerate_C(f)) {
    const auto l = l_sequence(f, q);
    const QPath p = q_path(f, q);
    for (std::size_t k = 0; k <= 3; ++k) {
      const std::vector<Subset> tail(q.q.begin() + static_cast<std::ptrdiff_t>(k), q.q.end());
      const auto cls = conj_class(f, k, tail, p[k]);
      EXPECT_EQ(cls[static_cast<std::size_t>(l[k] - 1)], q);
    }
  }
}

TEST(Sigma, IdentityActsTrivially) {
  const QSpace space(Format{2, 3});
  const Sigma id = space.identity_sigma();
  EXPECT_EQ(space.sign(id), 1);
  for (std::size_t q = 0; q < space.size(); ++q) {
    EXPECT_EQ(space.apply_sigma(id, q), q);
    EXPECT_EQ(space.apply_component(id, q), q);
  }
}

TEST(Sigma, OneDimensionalSigmaIsSymmetricGroup) {
  const QSpace space(Format{4});
  EXPECT_EQ(space.components().size(), 1u);
  EXPECT_DOUBLE_EQ(space.sigma_order(), 24.0);
}

TEST(Sigma, OrderForSmallBoundaryBases) {
  EXPECT_DOUBLE_EQ(QSpace(Format{2, 3}).sigma_order(), 46080.0);
}

TEST(Sigma, SequentialEqualsComponentwiseUpToTwoLevels) {
  SeededRng rng(17);
  for (const Format& f : {Format{2, 2}, Format{2, 3}, Format{3, 2}, Format{4}}) {
    const QSpace space(f);
    for (int t = 0; t < 300; ++t) {
      const Sigma s = space.random_sigma(rng);
      const auto q = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(space.size()) - 1));
      EXPECT_EQ(space.apply_sigma(s, q), space.apply_component(s, q));
    }
  }
}

TEST(Sigma, SequentialDiffersFromComponentwiseOnThreeLevels) {
  // Level-k components are keyed by l_{k-1}, which lower-level moves can change.
  SeededRng rng(17);
  const QSpace space(Format{2, 2, 2});
  int differing = 0;
  for (int t = 0; t < 300; ++t) {
    const Sigma s = space.random_sigma(rng);
    const auto q = static_cast<std::size_t>(rng.uniform_int(0, 23));
    differing += space.apply_sigma(s, q) != space.apply_component(s, q);
  }
  EXPECT_GT(differing, 0);
}

TEST(Sigma, ComponentwiseActionIsABijection) {
  SeededRng rng(4);
  const QSpace space(boundary_base({2, 3, 4}));
  for (int t = 0; t < 20; ++t) {
    const Sigma s = space.random_sigma(rng);
    std::set<std::size_t> image;
    for (std::size_t q = 0; q < space.size(); ++q) image.insert(space.apply_component(s, q));
    EXPECT_EQ(image.size(), space.size());
  }
}

TEST(Sigma, PermutationSign) {
  EXPECT_EQ(perm_sign({0, 1, 2}), 1);
  EXPECT_EQ(perm_sign({1, 0, 2}), -1);
  EXPECT_EQ(perm_sign({1, 2, 0}), 1);
}

TEST(DiagonalMonomial, ClosedCube) {
  const Monomial m = diagonal_monomial({2, 2, 2}, DiagonalVariant::Closed);
  EXPECT_EQ(m.degree(), 24u);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        const bool extreme = (i == j && j == k);
        EXPECT_EQ(m.exponent(EntryVar{i, j, k}), extreme ? 6u : 2u);
      }
}

TEST(DiagonalMonomial, OneDimensionalBoundaryIsMainDiagonal) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Monomial::Factor> f;
    for (int j = 1; j <= n; ++j) f.emplace_back(EntryVar{j, j}, 1u);
    EXPECT_EQ(diagonal_monomial(Format{n}, DiagonalVariant::Boundary), Monomial::from_factors(f));
  }
}

TEST(DiagonalMonomial, WorkedExampleFactor) {
  const Monomial m = diagonal_monomial(kWorkedFormat, DiagonalVariant::Boundary);
  EXPECT_EQ(m.degree(), 120u);
  EXPECT_GE(m.exponent(EntryVar{2, 1, 2, 2, 4}), 1u);
}

TEST(Render, MarksCutsAndPath) {
  const std::string pic = render_qseq(kWorkedFormat, worked_seq());
  EXPECT_NE(pic.find("P4"), std::string::npos);
  EXPECT_NE(pic.find('x'), std::string::npos);
  EXPECT_NE(pic.find('*'), std::string::npos);
}

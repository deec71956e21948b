#include <gtest/gtest.h>

#include "hyperdet/linalg.hpp"
#include "hyperdet/polynomial.hpp"
#include "hyperdet/rng.hpp"
#include "hyperdet/univariate.hpp"
#include "support.hpp"

using namespace hyperdet;

namespace {

Polynomial random_poly(SeededRng& rng, int terms, int max_exp) {
  std::vector<Term> t;
  for (int i = 0; i < terms; ++i) {
    std::vector<Monomial::Factor> f;
    for (int v = 1; v <= 3; ++v) {
      const auto e = static_cast<std::uint32_t>(rng.uniform_int(0, max_exp));
      if (e) f.emplace_back(EntryVar{v, static_cast<int>(rng.uniform_int(1, 2))}, e);
    }
    t.push_back({Monomial::from_factors(f), Integer(static_cast<long>(rng.uniform_int(-5, 5)))});
  }
  return Polynomial::from_terms(t);
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("0/7").get_den(), 1);
  EXPECT_ERROR_KIND(parse_rational("1/0"), ErrorKind::Parse);
  EXPECT_ERROR_KIND(parse_rational("x"), ErrorKind::Parse);
}

TEST(EntryVar, OrderAndRendering) {
  EXPECT_LT((EntryVar{1, 2}), (EntryVar{2, 1}));
  EXPECT_LT((EntryVar{1, 2, 1}), (EntryVar{1, 2, 2}));
  EXPECT_EQ((EntryVar{1, 2, 3}).to_string(), "a[1,2,3]");
  EXPECT_ERROR_KIND((EntryVar{0, 1}), ErrorKind::IndexOutOfRange);
}

TEST(Polynomial, AdditiveInverse) {
  EXPECT_EQ(P("a[1]+a[2]") + P("-a[1]"), P("a[2]"));
  EXPECT_TRUE((P("a[1]*a[2]-3") * Polynomial(0)).is_zero());
}

TEST(Polynomial, SquareOfTwoByTwoDeterminant) {
  const Polynomial det = P("a[1,1]*a[2,2]-a[1,2]*a[2,1]");
  const Polynomial sq = det * det;
  ASSERT_EQ(sq.size(), 3u);
  EXPECT_EQ(sq.coefficient(Monomial::from_factors({{EntryVar{1, 1}, 2}, {EntryVar{2, 2}, 2}})), 1);
  EXPECT_EQ(sq.coefficient(Monomial::from_factors({{EntryVar{1, 2}, 2}, {EntryVar{2, 1}, 2}})), 1);
  EXPECT_EQ(sq.coefficient(Monomial::from_factors(
                {{EntryVar{1, 1}, 1}, {EntryVar{1, 2}, 1}, {EntryVar{2, 1}, 1}, {EntryVar{2, 2}, 1}})),
            -2);
}

TEST(Polynomial, TextFormRoundTrip) {
  const Polynomial p = P("4*a[1,2,1]*a[2,1,1]*a[1,1,2]*a[2,2,2] - 2*a[1,1,1]^2 + 7");
  EXPECT_EQ(parse_polynomial(p.to_string()), p);
  EXPECT_EQ(Polynomial(0).to_string(), "0");
  EXPECT_EQ(P("a{12}*a{21}"), P("a[1,2]*a[2,1]"));
  SeededRng rng(3);
  for (int i = 0; i < 50; ++i) {
    const Polynomial q = random_poly(rng, 6, 3);
    EXPECT_EQ(parse_polynomial(q.to_string()), q);
  }
  EXPECT_ERROR_KIND(parse_polynomial("a[1,"), ErrorKind::Parse);
}

TEST(Polynomial, CanonicalOrderIsAscending) {
  const Polynomial p = P("a[2]^2 + a[1] + a[1]^2");
  for (std::size_t i = 1; i < p.size(); ++i) EXPECT_LT(p.terms()[i - 1].monomial, p.terms()[i].monomial);
}

TEST(Polynomial, RingLawsOnRandomTriples) {
  SeededRng rng(11);
  for (int i = 0; i < 40; ++i) {
    const Polynomial a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2), c = random_poly(rng, 4, 2);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Polynomial, ExactDivision) {
  EXPECT_EQ(poly_exact_div(P("a[1]^2-a[2]^2"), P("a[1]-a[2]")), P("a[1]+a[2]"));
  const Polynomial p = P("3*a[1]*a[2]-a[3]");
  EXPECT_EQ(poly_exact_div(p, Polynomial(1)), p);
  EXPECT_ERROR_KIND(poly_exact_div(P("a[1]^2+1"), P("a[1]+1")), ErrorKind::NotDivisible);
  EXPECT_ERROR_KIND(poly_exact_div(p, Polynomial(0)), ErrorKind::NotDivisible);
  EXPECT_ERROR_KIND(poly_exact_div(P("a[1]"), Polynomial(2)), ErrorKind::NotDivisible);
  SeededRng rng(5);
  for (int i = 0; i < 40; ++i) {
    const Polynomial x = random_poly(rng, 4, 2), y = random_poly(rng, 3, 2);
    if (y.is_zero() || y.degree() < 1) continue;
    EXPECT_EQ(poly_exact_div(x * y, y), x);
  }
}

TEST(Polynomial, Evaluation) {
  const Polynomial det = P("a[1,1]*a[2,2]-a[1,2]*a[2,1]");
  Assignment id{{EntryVar{1, 1}, 1}, {EntryVar{2, 2}, 1}, {EntryVar{1, 2}, 0}, {EntryVar{2, 1}, 0}};
  EXPECT_EQ(poly_eval(det, id), 1);
  EXPECT_EQ(poly_eval(P("a[1]*a[2]+5"), [](EntryVar) { return Rational(0); }), 5);
  EXPECT_ERROR_KIND(poly_eval(det, Assignment{}), ErrorKind::MissingVariable);

  SeededRng rng(9);
  for (int i = 0; i < 30; ++i) {
    const Polynomial a = random_poly(rng, 4, 2), b = random_poly(rng, 4, 2);
    auto value = [](EntryVar v) { return make_rational(v[0] * 3 - v[1], v[1] + 1); };
    EXPECT_EQ(poly_eval(a * b, value), poly_eval(a, value) * poly_eval(b, value));
  }
}

TEST(Univariate, Resultants) {
  const Polynomial a = P("a[1]"), b = P("a[2]");
  EXPECT_EQ(sylvester_resultant(UniPoly<Polynomial>{-a, 1}, UniPoly<Polynomial>{-b, 1}), a - b);
  EXPECT_EQ(sylvester_resultant(UniPoly<Rational>{0, 0, 1}, UniPoly<Rational>{1, 1}), 1);
  const UniPoly<Rational> p{3, -1, 4, 1};
  EXPECT_EQ(sylvester_resultant(p, p), 0);
  EXPECT_ERROR_KIND(sylvester_resultant(UniPoly<Rational>{2}, UniPoly<Rational>{3}), ErrorKind::BothConstant);
}

TEST(Univariate, Discriminants) {
  const Polynomial b = P("a[1]"), c = P("a[2]");
  EXPECT_EQ(univariate_discriminant(UniPoly<Polynomial>{c, b, 1}), P("a[1]^2-4*a[2]"));
  EXPECT_EQ(univariate_discriminant(UniPoly<Rational>{1, -2, 1}), 0);
  EXPECT_EQ(univariate_discriminant(UniPoly<Rational>{0, 2, -3, 1}), 4);
  EXPECT_ERROR_KIND(univariate_discriminant(UniPoly<Rational>{1, 1}), ErrorKind::WrongShape);
}

TEST(Univariate, DiscriminantVanishesOnDoubleRoots) {
  SeededRng rng(21);
  for (int i = 0; i < 30; ++i) {
    UniPoly<Rational> p{Rational(static_cast<long>(rng.uniform_int(-9, 9))),
                        Rational(static_cast<long>(rng.uniform_int(-9, 9))), 1};
    const Rational r = make_rational(static_cast<long>(rng.uniform_int(-5, 5)), static_cast<long>(rng.uniform_int(1, 4)));
    // p * (z - r)^2
    UniPoly<Rational> sq{r * r, -2 * r, 1}, prod(5, 0);
    for (std::size_t x = 0; x < p.size(); ++x)
      for (std::size_t y = 0; y < sq.size(); ++y) prod[x + y] += p[x] * sq[y];
    EXPECT_EQ(univariate_discriminant(prod), 0);
  }
}

TEST(Univariate, BinaryFormDiscriminantMatchesAffineCase) {
  EXPECT_EQ(binary_form_discriminant({2, 3, 1}), 1);
  // z*w has discriminant 1 although its z^2 coefficient vanishes.
  EXPECT_EQ(binary_form_discriminant({0, 1, 0}), 1);
  EXPECT_EQ(binary_form_discriminant({0, 0, 1}), 0);
  EXPECT_EQ(binary_form_discriminant({1, 0, 0}), 0);
}

TEST(Linalg, NullspaceExamples) {
  EXPECT_TRUE(nullspace_exact(RationalMatrix::identity(3)).empty());
  const auto ns = nullspace_exact(RationalMatrix(1, 2, {1, 1}));
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_EQ(ns[0], (std::vector<Rational>{1, -1}));
}

TEST(Linalg, NullspaceVectorsAreAnnihilated) {
  SeededRng rng(2);
  for (int t = 0; t < 20; ++t) {
    RationalMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform_int(-3, 3)));
    const auto ns = nullspace_exact(m);
    EXPECT_EQ(ns.size() + rank(m), 5u);
    for (const auto& v : ns)
      for (std::size_t i = 0; i < 3; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 5; ++j) s += m(i, j) * v[j];
        EXPECT_EQ(s, 0);
      }
  }
}

TEST(Linalg, DeterminantAndSymmetricRank) {
  EXPECT_EQ(determinant(RationalMatrix(2, 2, {1, 2, 3, 4})), -2);
  EXPECT_EQ(determinant(RationalMatrix(3, 3, {0, 1, 0, 1, 0, 0, 0, 0, 1})), -1);
  EXPECT_ERROR_KIND(determinant(RationalMatrix(2, 3)), ErrorKind::NotSquare);
  EXPECT_EQ(symmetric_rank(RationalMatrix(3, 3)), 0u);
  EXPECT_EQ(symmetric_rank(RationalMatrix(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0})), 2u);
  EXPECT_ERROR_KIND(symmetric_rank(RationalMatrix(2, 2, {1, 2, 3, 4})), ErrorKind::NotSymmetric);
}

TEST(Linalg, BareissOverPolynomialsIsLeibniz) {
  std::vector<Polynomial> m;
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) m.push_back(Polynomial::variable(EntryVar{i, j}));
  const Polynomial det = bareiss_determinant(m, 3);
  EXPECT_EQ(det.size(), 6u);
  EXPECT_EQ(det.coefficient(Monomial::from_factors({{EntryVar{1, 1}, 1}, {EntryVar{2, 2}, 1}, {EntryVar{3, 3}, 1}})), 1);
  EXPECT_EQ(det.coefficient(Monomial::from_factors({{EntryVar{1, 2}, 1}, {EntryVar{2, 1}, 1}, {EntryVar{3, 3}, 1}})), -1);
}

#include <gtest/gtest.h>

#include <random>

#include "nindep/constructions.hpp"
#include "nindep/nodesets.hpp"
#include "nindep/poly2.hpp"
#include "oracles.hpp"

using namespace nindep;

namespace {

const Poly2 X = Poly2::x();
const Poly2 Y = Poly2::y();
const Poly2 ONE(Rational(1));

Point pt(long x, long y) { return {Rational(x), Rational(y)}; }

Poly1 t_poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.emplace_back(v);
  return Poly1(std::move(c));
}

Point random_point(std::mt19937_64& rng) {
  return {oracle::random_small_rational(rng, 20, 7), oracle::random_small_rational(rng, 20, 7)};
}

Line random_test_line(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-5, 5);
  for (;;) {
    const long a = c(rng), b = c(rng);
    if (a != 0 || b != 0) return Line(a, b, c(rng));
  }
}

}  // namespace

TEST(Monomials, GradedLexOrder) {
  const auto ms = monomials_up_to(2);
  ASSERT_EQ(ms.size(), 6u);
  EXPECT_EQ(ms[0].x, 0);
  EXPECT_EQ(ms[1].x, 1);
  EXPECT_EQ(ms[2].y, 1);
  EXPECT_EQ(ms[3].x, 2);
  EXPECT_EQ(ms[4].x, 1);
  EXPECT_EQ(ms[4].y, 1);
  EXPECT_EQ(ms[5].y, 2);
  for (std::size_t i = 0; i < ms.size(); ++i) EXPECT_EQ(monomial_index(ms[i]), i);
  EXPECT_EQ(num_monomials(5), 21u);
  EXPECT_EQ(num_monomials(0), 1u);
}

TEST(Poly2Basics, DegreeSentinelAndTerms) {
  EXPECT_EQ(Poly2().degree(), -1);
  EXPECT_TRUE(Poly2().is_zero());
  EXPECT_EQ(Poly2(Rational(0)).degree(), -1);
  EXPECT_EQ(ONE.degree(), 0);
  EXPECT_EQ((X * Y + X).degree(), 2);
  EXPECT_TRUE((X - X).is_zero());
  EXPECT_EQ((X - X).terms().size(), 0u);
}

TEST(Poly2Basics, CoefficientVectorRoundTrip) {
  const Poly2 p = Rational(3) * X * X - Y + Poly2(make_rational(1, 2));
  const auto v = p.coefficient_vector(2);
  ASSERT_EQ(v.size(), 6u);
  EXPECT_EQ(v[0], make_rational(1, 2));
  EXPECT_EQ(v[2], Rational(-1));
  EXPECT_EQ(v[3], Rational(3));
  EXPECT_EQ(Poly2::from_coefficients(v, 2), p);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ((ONE - X - Y)(pt(0, 0)), Rational(1));
  EXPECT_EQ((X * X - Y * Y)(pt(2, 1)), Rational(3));
  EXPECT_EQ((X * Y)(Point{make_rational(1, 2), make_rational(-2, 3)}), make_rational(-1, 3));
}

TEST(Evaluate, NullspaceBasisVanishesOnExtremalSet) {
  const Configuration cfg = extremal_seven_config(5, 4, 3);
  const auto space = vanishing_space(cfg.nodes, 4);
  ASSERT_EQ(space.dimension(), 7u);
  for (const auto& p : space.basis)
    for (const auto& a : cfg.nodes) EXPECT_EQ(p(a), 0);
}

TEST(Multiply, Examples) {
  EXPECT_EQ((X + Y) * (X - Y), X * X - Y * Y);
  const Poly2 p = X * X * Y - Rational(7) * Y + ONE;
  EXPECT_EQ(p * ONE, p);
  EXPECT_EQ((p * (X + Y)).degree(), 4);
}

TEST(Multiply, LineFactorVanishesOnLine) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const Line l = random_test_line(rng);
    const Poly2 q = oracle::random_poly(rng, 3);
    const Poly2 prod = l.poly() * q;
    const NodeSet on = points_on_line(l, 5, static_cast<std::uint64_t>(i));
    for (const auto& a : on) EXPECT_EQ(prod(a), 0);
  }
}

TEST(Multiply, EvaluationIsMultiplicative) {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 20; ++i) {
    const Poly2 p = oracle::random_poly(rng, 1 + i % 4), q = oracle::random_poly(rng, 1 + i % 3);
    const Poly2 pq = p * q;
    EXPECT_EQ(pq.degree(), p.degree() + q.degree());
    for (int j = 0; j < 20; ++j) {
      const Point a = random_point(rng);
      EXPECT_EQ(pq(a), Rational(p(a) * q(a)));
    }
  }
}

TEST(Divides, Examples) {
  const auto r = divides(X + Y, X * X - Y * Y);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, X - Y);
  EXPECT_FALSE(divides(X, X * Y + ONE));
  EXPECT_THROW(divides(ONE, X), ContractError);
  EXPECT_THROW(divides(X, Poly2()), ContractError);
  EXPECT_FALSE(divides(X * X, X));
}

TEST(Divides, RoundTripOnRandomPairs) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 50; ++i) {
    const Poly2 q = oracle::random_poly(rng, 1 + i % 4, 5);
    const Poly2 r = oracle::random_poly(rng, i % 5, 5);
    const auto got = divides(q, q * r);
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, r);
  }
}

TEST(Line, NormalizesAndRejectsDegenerate) {
  const Line l(2, 4, 6);
  EXPECT_EQ(l.a(), 1);
  EXPECT_EQ(l.b(), 2);
  EXPECT_EQ(l.c(), 3);
  const Line v(0, -3, 6);
  EXPECT_EQ(v.b(), 1);
  EXPECT_EQ(v.c(), -2);
  EXPECT_EQ(Line(1, 2, 3), Line(-2, -4, -6));
  EXPECT_THROW(Line(0, 0, 1), ContractError);
}

TEST(Line, ParametrizationStaysOnLine) {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 30; ++i) {
    const Line l = random_test_line(rng);
    for (long t = -3; t <= 3; ++t) EXPECT_TRUE(l.contains(l.at(Rational(t))));
  }
}

TEST(Line, IntersectionAndParallel) {
  const Line a(1, -1, 0), b(1, 1, -2), c(2, -2, 5);
  EXPECT_TRUE(a.parallel_to(c));
  EXPECT_FALSE(a.intersection(c));
  const auto p = a.intersection(b);
  ASSERT_TRUE(p);
  EXPECT_EQ(p->x, 1);
  EXPECT_EQ(p->y, 1);
}

TEST(RestrictToLine, Examples) {
  const Line y0(0, 1, 0);
  EXPECT_EQ(restrict_to_line(X * X - Y, y0), t_poly({0, 0, 1}));
  EXPECT_TRUE(restrict_to_line(Y * (X * X + ONE), y0).is_zero());
  const Line x2(1, 0, -2);  // x = 2, parametrized by y
  EXPECT_EQ(restrict_to_line(X * Y, x2), t_poly({0, 2}));
}

TEST(RestrictToLine, VanishingOnSixPointsInDegreeFive) {
  std::mt19937_64 rng(35);
  for (int i = 0; i < 5; ++i) {
    const Line l = random_test_line(rng);
    const NodeSet on = points_on_line(l, 6, static_cast<std::uint64_t>(100 + i));
    for (const auto& p : vanishing_space(on, 5).basis) {
      EXPECT_TRUE(restrict_to_line(p, l).is_zero());
      EXPECT_TRUE(divides(l.poly(), p));
    }
  }
}

TEST(RestrictToLine, PolynomialsVanishingAtNPlusOnePointsContainTheLine) {
  std::mt19937_64 rng(36);
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i < 3; ++i) {
      const Line l = random_test_line(rng);
      NodeSet xs = points_on_line(l, static_cast<std::size_t>(n + 1), static_cast<std::uint64_t>(10 * n + i));
      // Extra nodes off the line make the vanishing space smaller but keep the property.
      const NodeSet extra = random_independent_set(static_cast<std::size_t>(n), n, static_cast<std::uint64_t>(n + i));
      for (const auto& a : extra)
        if (!l.contains(a) && !xs.contains(a)) xs = xs.with(a);
      for (const auto& p : vanishing_space(xs, n).basis) {
        EXPECT_TRUE(restrict_to_line(p, l).is_zero());
        const auto r = divides(l.poly(), p);
        ASSERT_TRUE(r);
        EXPECT_EQ(l.poly() * *r, p);
      }
    }
  }
}

TEST(SquareFree, Examples) {
  EXPECT_FALSE(is_square_free(X * X * Y));
  EXPECT_TRUE(is_square_free(X * Y * (X + Y - ONE)));
  EXPECT_TRUE(is_square_free(X));
  EXPECT_FALSE(is_square_free(X * X));
  EXPECT_FALSE(is_square_free((Y - X) * (Y - X) * (X + ONE)));
  EXPECT_TRUE(is_square_free(X * X - Y));
  EXPECT_TRUE(is_square_free(X * X + Y * Y + ONE));
  EXPECT_THROW(is_square_free(ONE), ContractError);
}

TEST(SquareFree, CircleTimesLine) {
  const Poly2 p = (X * X + Y * Y - ONE) * (X - Y);
  EXPECT_TRUE(is_square_free(p));
  EXPECT_FALSE(divides((X - Y) * (X - Y), p));
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      for (long c = -2; c <= 2; ++c) {
        if (a == 0 && b == 0) continue;
        const Poly2 l = Line(a, b, c).poly();
        EXPECT_FALSE(divides(l * l, p)) << a << "," << b << "," << c;
      }
}

TEST(SquareFree, RepeatedFactorDetected) {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    const Poly2 p = oracle::random_poly(rng, 1 + i % 2, 4);
    const Poly2 q = oracle::random_poly(rng, i % 3, 4);
    EXPECT_FALSE(is_square_free(p * p * q));
  }
}

TEST(SquareFree, SmallPerturbationKeepsSquareFree) {
  std::mt19937_64 rng(38);
  const Rational eps = make_rational(1, 1000000);
  int checked = 0;
  while (checked < 50) {
    const int deg = 1 + checked % 5;
    const Poly2 p1 = oracle::random_poly(rng, deg, 5);
    if (!is_square_free(p1)) continue;
    const Poly2 p2 = oracle::random_poly(rng, 1 + (checked % (deg + 1)), 5);
    EXPECT_TRUE(is_square_free(p1 + eps * p2)) << to_string(p1) << " + eps*(" << to_string(p2) << ")";
    ++checked;
  }
}

TEST(LineIntersections, Examples) {
  const Line y0(0, 1, 0);
  const auto a = distinct_line_intersections(X * X - Y, y0);
  EXPECT_FALSE(a.contained);
  EXPECT_EQ(a.distinct, 1u);
  EXPECT_EQ(distinct_line_intersections(X * X + Y * Y - ONE, y0).distinct, 2u);
  EXPECT_TRUE(distinct_line_intersections(Y * (X + ONE), y0).contained);
  // Complex intersections are counted: x^2 + 1 meets y = 0 twice.
  EXPECT_EQ(distinct_line_intersections(X * X + ONE + Y, y0).distinct, 2u);
  // Parallel line never meets it.
  EXPECT_EQ(distinct_line_intersections(Y - ONE, y0).distinct, 0u);
}

TEST(Poly2Text, Printing) {
  EXPECT_EQ(to_string(Poly2()), "0");
  EXPECT_FALSE(to_string(X * X - Y).empty());
}

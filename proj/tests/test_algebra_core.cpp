#include "superint/multipoly.hpp"
#include "superint/pochhammer.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

using namespace superint;
using superint::testing::c;
using superint::testing::random_poly;
using superint::testing::random_rational;
using superint::testing::x;

TEST(Rational, LowestTermsAndSerialization) {
  EXPECT_EQ(Rational(6, -4).str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-7"), Rational(-7));
  EXPECT_EQ(Rational::parse(" +3/9 "), Rational(1, 3));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Pochhammer, Examples) {
  EXPECT_EQ(pochhammer(Rational(7, 3), 0), Rational(1));
  EXPECT_EQ(pochhammer(Rational(3), 2), Rational(12));
  EXPECT_EQ(pochhammer(Rational(1, 2), 2), Rational(3, 4));
  EXPECT_EQ(pochhammer(Rational(-2), 3), Rational(0));
}

TEST(Pochhammer, SplitProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const Rational a = random_rational(rng, 20, 16);
    const unsigned m = static_cast<unsigned>(rng() % 21), n = static_cast<unsigned>(rng() % 21);
    EXPECT_EQ(pochhammer(a, m + n), pochhammer(a, m) * pochhammer(a + Rational(m), n)) << a << " " << m << " " << n;
  }
}

TEST(MultiPoly, MulExamples) {
  const std::size_t d = 2;
  const MultiPoly p = x(d, 0) * Rational(3) - c(d, 1);
  EXPECT_EQ(poly_mul(c(d, 1), p), p);
  EXPECT_EQ(poly_mul(x(d, 0), x(d, 1)), MultiPoly::monomial(Monomial(2, {1, 1})));

  const MultiPoly q = x(d, 0) + x(d, 1) * Rational(2) - c(d, 1);
  MultiPoly expected(d);
  expected.add_term(Monomial(2, {2, 0}), Rational(3));
  expected.add_term(Monomial(2, {1, 1}), Rational(6));
  expected.add_term(Monomial(2, {1, 0}), Rational(-4));
  expected.add_term(Monomial(2, {0, 1}), Rational(-2));
  expected.add_term(Monomial(2, {0, 0}), Rational(1));
  EXPECT_EQ(poly_mul(p, q), expected);
  EXPECT_EQ(poly_mul(p, q).str(), "3*x1^2 + 6*x1*x2 - 4*x1 - 2*x2 + 1");
  EXPECT_THROW(poly_mul(p, c(3, 1)), std::invalid_argument);
}

TEST(MultiPoly, PartialExamples) {
  const MultiPoly p = MultiPoly::monomial(Monomial(2, {2, 1}));
  EXPECT_TRUE(poly_partial(c(2, 5), 0).is_zero());
  EXPECT_EQ(poly_partial(p, 0), MultiPoly::monomial(Monomial(2, {1, 1}), Rational(2)));
  EXPECT_EQ(poly_partial(p, 1), MultiPoly::monomial(Monomial(2, {2, 0})));
  EXPECT_THROW(poly_partial(p, 2), std::out_of_range);
}

TEST(MultiPoly, EvalExamples) {
  const std::size_t d = 2;
  const std::vector<Rational> half{Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(poly_eval(x(d, 0) + x(d, 1), half), Rational(1));
  const std::vector<Rational> third{Rational(1, 3), Rational(0)};
  EXPECT_EQ(poly_eval(x(d, 0) * Rational(3) - c(d, 1), third), Rational(0));
  const std::vector<Rational> pt{Rational(2, 3), Rational(3, 4)};
  EXPECT_EQ(poly_eval(x(d, 0) * x(d, 1), pt), Rational(1, 2));
  EXPECT_THROW(poly_eval(x(d, 0), std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST(MultiPoly, ComposeProjectiveExamples) {
  const std::size_t d = 2;
  const std::vector<Rational> t{Rational(0), Rational(1)};
  const MultiPoly one = c(d, 1);
  EXPECT_EQ(poly_compose_projective(t, x(d, 0) * Rational(2) - one, one, 1), x(d, 0) * Rational(2) - one);
  EXPECT_EQ(poly_compose_projective(std::vector<Rational>{Rational(1)}, x(d, 1), x(d, 0), 0), one);
  const MultiPoly den = one - x(d, 0);
  EXPECT_EQ(poly_compose_projective(t, x(d, 1) * Rational(2) - den, den, 1),
            x(d, 0) + x(d, 1) * Rational(2) - one);
}

TEST(MultiPoly, SubstituteExamples) {
  const std::size_t d = 2;
  const MultiPoly one = c(d, 1);
  const std::vector<MultiPoly> id{x(d, 0), x(d, 1)};
  std::mt19937_64 rng(3);
  const MultiPoly p = random_poly(rng, d, 4);
  EXPECT_EQ(poly_substitute_vars(p, id), p);

  const std::vector<MultiPoly> im1{one - x(d, 0) - x(d, 1), x(d, 0)};
  EXPECT_EQ(poly_substitute_vars(x(d, 0), im1), one - x(d, 0) - x(d, 1));

  const std::vector<MultiPoly> im2{x(d, 1), one - x(d, 0) - x(d, 1)};
  EXPECT_EQ(poly_substitute_vars(x(d, 0) * x(d, 1), im2),
            x(d, 1) - x(d, 0) * x(d, 1) - x(d, 1) * x(d, 1));
}

TEST(MultiPoly, RingProperties) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + trial % 3;
    const MultiPoly p = random_poly(rng, d, 4), q = random_poly(rng, d, 4);
    EXPECT_EQ(poly_mul(p, q), poly_mul(q, p));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        EXPECT_EQ(poly_partial(poly_partial(p, i), j), poly_partial(poly_partial(p, j), i));
    if (!p.is_zero() && !q.is_zero()) EXPECT_EQ(poly_mul(p, q).degree(), p.degree() + q.degree());
  }
}

TEST(MultiPoly, EvalIsRingHomomorphism) {
  std::mt19937_64 rng(17);
  const std::size_t d = 3;
  for (int trial = 0; trial < 50; ++trial) {
    const MultiPoly p = random_poly(rng, d, 3), q = random_poly(rng, d, 3);
    std::vector<Rational> pt;
    for (std::size_t i = 0; i < d; ++i) pt.push_back(random_rational(rng));
    EXPECT_EQ(poly_eval(poly_mul(p, q), pt), poly_eval(p, pt) * poly_eval(q, pt));
    EXPECT_EQ(poly_eval(p + q, pt), poly_eval(p, pt) + poly_eval(q, pt));
  }
}

TEST(MultiPoly, ComposeProjectiveMatchesScalarEvaluation) {
  std::mt19937_64 rng(23);
  const std::size_t d = 2;
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned m = 1 + static_cast<unsigned>(trial % 4);
    std::vector<Rational> q;
    for (unsigned k = 0; k <= m; ++k) q.push_back(random_rational(rng));
    const MultiPoly num = random_poly(rng, d, 1, 3), den = random_poly(rng, d, 1, 3);
    const MultiPoly r = poly_compose_projective(q, num, den, m);
    std::vector<Rational> pt{random_rational(rng), random_rational(rng)};
    const Rational dv = poly_eval(den, pt);
    if (dv.is_zero()) continue;
    const Rational tv = poly_eval(num, pt) / dv;
    Rational qv(0);
    for (unsigned k = 0; k <= m; ++k) qv += q[k] * pow(tv, static_cast<int>(k));
    EXPECT_EQ(poly_eval(r, pt), pow(dv, static_cast<int>(m)) * qv);
  }
}

TEST(Monomial, Enumeration) {
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  EXPECT_EQ(monomials_up_to_degree(3, 4).size(), 35u);
  const auto ms = monomials_of_degree(2, 1);
  ASSERT_EQ(ms.size(), 2u);
  EXPECT_TRUE(GradedLex{}(ms[0], ms[1]));
}

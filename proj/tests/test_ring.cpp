#include "qcongr/ring.hpp"
#include "qcongr/qfactor.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcongr;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int max_degree)
{
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-1000, 1000);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

Rational random_point(std::mt19937_64& rng)
{
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 30);
  return make_rational(num(rng), den(rng));
}

const IntPoly q = IntPoly::q_power(1);

}  // namespace

TEST(IntPoly, ZeroHasNoStoredCoefficients)
{
  IntPoly f{1, 2, 0, 0};
  EXPECT_EQ(f.degree(), 1);
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((f - f).coeffs().size(), 0u);
}

TEST(IntPoly, DividesExactly)
{
  IntPoly q2m1 = q * q - IntPoly(1);
  auto r = divides_exactly(q - IntPoly(1), q2m1);
  ASSERT_TRUE(r.divides);
  EXPECT_EQ(r.quotient, q + IntPoly(1));
  EXPECT_TRUE(divides_exactly(cyclotomic(3), IntPoly::q_power(3) - IntPoly(1)).divides);
  EXPECT_FALSE(divides_exactly(q - IntPoly(1), q * q + IntPoly(1)).divides);
}

TEST(IntPoly, Evaluation)
{
  EXPECT_EQ(cyclotomic(5).eval(Rational(1)), Rational(5));
  EXPECT_EQ(IntPoly({3, 0, 2}).eval(make_rational(1, 2)), make_rational(7, 2));
}

TEST(PolyGcd, Examples)
{
  IntPoly a = q * q - IntPoly(1);
  IntPoly b = IntPoly::q_power(3) - IntPoly(1);
  EXPECT_EQ(poly_gcd(a, b), q - IntPoly(1));
  EXPECT_EQ(poly_gcd(cyclotomic(5), q - IntPoly(1)), IntPoly(1));
  IntPoly f{6, 0, -4};
  EXPECT_EQ(poly_gcd(IntPoly(), f), f.primitive_part());
  EXPECT_THROW(poly_gcd(IntPoly(), IntPoly()), std::invalid_argument);
}

TEST(RationalFn, Normalization)
{
  RationalFn one_minus_q(IntPoly{1, -1});
  RationalFn s = RationalFn(1) / one_minus_q + RationalFn(q) / one_minus_q;
  EXPECT_EQ(s, RationalFn(IntPoly{1, 1}, IntPoly{1, -1}));
  EXPECT_EQ(RationalFn(IntPoly{-1, 1}, IntPoly{-1, 0, 1}), RationalFn(IntPoly(1), IntPoly{1, 1}));
  EXPECT_EQ(RationalFn::q_power(-1) * RationalFn(q), RationalFn(1));
}

TEST(RationalFn, ScalarDenominatorKept)
{
  RationalFn third = RationalFn(Rational(make_rational(1, 3)));
  EXPECT_EQ(third.den(), IntPoly(3));
  EXPECT_EQ((third * RationalFn(3)), RationalFn(1));
  EXPECT_EQ(third.eval_at(Rational(7)), make_rational(1, 3));
}

TEST(RationalFn, EvalAndPole)
{
  RationalFn f(IntPoly(1), IntPoly{1, 1});
  EXPECT_EQ(f.eval_at(Rational(1)), make_rational(1, 2));
  RationalFn g(IntPoly(1), IntPoly{1, -1});
  EXPECT_THROW(g.eval_at(Rational(1)), PoleError);
}

TEST(RingProperty, ArithmeticCommutesWithEvaluation)
{
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 120; ++trial) {
    IntPoly f = random_poly(rng, 50), g = random_poly(rng, 50);
    Rational r = random_point(rng);
    EXPECT_EQ((f + g).eval(r), f.eval(r) + g.eval(r));
    EXPECT_EQ((f - g).eval(r), f.eval(r) - g.eval(r));
    EXPECT_EQ((f * g).eval(r), f.eval(r) * g.eval(r));
  }
}

TEST(RingProperty, TrailingCoefficientNonzero)
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly f = random_poly(rng, 20);
    IntPoly h = f - f * IntPoly(1) + f;
    if (!h.is_zero()) {
      EXPECT_NE(h.coeffs().back(), 0);
    }
  }
}

TEST(RingProperty, GcdDividesAndLeavesCoprimeCofactors)
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly common = random_poly(rng, 4);
    if (common.is_zero()) continue;
    IntPoly a = random_poly(rng, 12) * common;
    IntPoly b = random_poly(rng, 12) * common;
    if (a.is_zero() || b.is_zero()) continue;
    IntPoly g = poly_gcd(a, b);
    auto da = divides_exactly(g, a);
    auto db = divides_exactly(g, b);
    ASSERT_TRUE(da.divides);
    ASSERT_TRUE(db.divides);
    EXPECT_EQ(poly_gcd(da.quotient, db.quotient), IntPoly(1));
    EXPECT_TRUE(divides_exactly(common.primitive_part(), g).divides);
  }
}

TEST(RingProperty, DivisionQuotientReproducesDividend)
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly p = random_poly(rng, 8);
    if (p.is_constant()) continue;
    IntPoly f = p * random_poly(rng, 15);
    auto r = divides_exactly(p, f);
    ASSERT_TRUE(r.divides);
    EXPECT_EQ(r.quotient * p.primitive_part(), f);
  }
}

TEST(RingProperty, NormalizationIdempotentAndEvaluationConsistent)
{
  std::mt19937_64 rng(11);
  int checked = 0;
  while (checked < 100) {
    IntPoly a = random_poly(rng, 10), b = random_poly(rng, 10), c = random_poly(rng, 4);
    if (b.is_zero() || c.is_zero()) continue;
    RationalFn f(a * c, b * c);
    EXPECT_EQ(f.normalized(), f);
    EXPECT_EQ(f.normalized().normalized(), f.normalized());
    EXPECT_GT(f.den().lead(), 0);
    Rational r = random_point(rng);
    if (b.eval(r) == 0 || c.eval(r) == 0) continue;
    EXPECT_EQ(f.eval_at(r), a.eval(r) / b.eval(r));
    ++checked;
  }
}

TEST(RingProperty, FieldOperationsCommuteWithEvaluation)
{
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 100) {
    IntPoly a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6), d = random_poly(rng, 6);
    if (b.is_zero() || d.is_zero() || c.is_zero()) continue;
    RationalFn f(a, b), g(c, d);
    Rational r = random_point(rng);
    if (b.eval(r) == 0 || d.eval(r) == 0 || c.eval(r) == 0) continue;
    EXPECT_EQ((f + g).eval_at(r), f.eval_at(r) + g.eval_at(r));
    EXPECT_EQ((f - g).eval_at(r), f.eval_at(r) - g.eval_at(r));
    EXPECT_EQ((f * g).eval_at(r), f.eval_at(r) * g.eval_at(r));
    EXPECT_EQ((f / g).eval_at(r), f.eval_at(r) / g.eval_at(r));
    ++checked;
  }
}

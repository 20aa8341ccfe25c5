#include "qcongr/congruence.hpp"
#include "qcongr/summands.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace qcongr;

namespace {

const IntPoly q = IntPoly::q_power(1);

IntPoly random_poly(std::mt19937_64& rng, int max_degree)
{
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coef(-20, 20);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& x : c) x = coef(rng);
  return IntPoly(std::move(c));
}

// Random value whose denominator avoids Phi_bad: products of 1 - q^j with bad not dividing j, times q^-e.
RationalFn random_value(std::mt19937_64& rng, long bad)
{
  std::uniform_int_distribution<long> j(1, 12), count(0, 3), e(0, 3);
  IntPoly den = IntPoly::q_power(static_cast<std::size_t>(e(rng)));
  for (long i = count(rng); i > 0; --i) {
    long step = j(rng);
    if (step % bad == 0) continue;
    den *= IntPoly(1) - IntPoly::q_power(static_cast<std::size_t>(step));
  }
  return RationalFn(random_poly(rng, 10), den);
}

}  // namespace

TEST(Congruence, QPowerIsOneModPhi)
{
  RationalFn a(IntPoly::q_power(7));
  EXPECT_TRUE(congruent_mod(a, RationalFn(1), cyclotomic(7)).holds());
  EXPECT_TRUE(congruent_mod(a, RationalFn(1), Modulus::phi_power(7, 1)).holds());
  EXPECT_FALSE(congruent_mod(a, RationalFn(1), Modulus::phi_power(7, 2)).holds());
}

TEST(Congruence, NotApplicableWhenDenominatorMeetsModulus)
{
  RationalFn a(IntPoly(1), IntPoly{1, -1});
  auto general = congruent_mod(a, RationalFn(0), q - IntPoly(1));
  EXPECT_EQ(general.verdict, Verdict::not_applicable);
  EXPECT_FALSE(general.coprimality_ok);
  EXPECT_EQ(congruent_mod(a, RationalFn(0), Modulus::phi_power(1, 1)).verdict, Verdict::not_applicable);
}

TEST(Congruence, ZeroDifferenceHoldsWithInfiniteOrder)
{
  RationalFn a(IntPoly{3, 1, 4}, IntPoly{1, 5});
  auto rep = congruent_mod(a, a, Modulus::qint_phi_power(9, 2));
  EXPECT_TRUE(rep.holds());
  for (const auto& [d, o] : rep.observed_orders) EXPECT_FALSE(o.has_value()) << d;
  EXPECT_TRUE(congruent_mod(a, a, cyclotomic(5) * cyclotomic(5)).holds());
}

TEST(Congruence, ThmOneHalfAtThree)
{
  // the two summands k = 0, 1 give q^-1 + 1 + q, equal to [3] q^-1
  RationalFn lhs = sum_terms({summand::div_wz(0), summand::div_wz(1)});
  EXPECT_EQ(lhs, RationalFn(IntPoly{1, 1, 1}, IntPoly{0, 1}));
  auto rep = congruent_mod(lhs, (sym::qi(3) * sym::qp(-1)).to_rational_fn(), Modulus::qint_phi_power(3, 2));
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.cofactor_degree, 0);
}

TEST(Congruence, ThmTwoAtThreeWithExtraFactor)
{
  std::vector<Term> t;
  for (long k = 0; k <= 2; ++k) t.push_back(summand::zudilin3(k));
  RationalFn lhs = sum_terms(t);
  // oracle: sympy sum of the three summands
  EXPECT_EQ(lhs, RationalFn(IntPoly{1, 3, 6, 10, 16, 22, 26, 26, 23, 17, 10, 4, 1}, IntPoly{1, 3, 3, 1}));
  RationalFn rhs = (sym::qi(3) * sym::qp(1) * Term(-1)).to_rational_fn();
  auto rep = congruent_mod_phi_power(lhs, rhs, 3, 2, q_int(3));
  EXPECT_TRUE(rep.holds());
  EXPECT_EQ(rep.required_orders.at(3), 3);
}

TEST(Congruence, ThmFourAtThree)
{
  RationalFn lhs = sum_terms({summand::st(1), summand::st(2)});
  EXPECT_EQ(lhs, RationalFn(IntPoly{1, 2, 3, 3, 3, 2, 1}, IntPoly{0, 1, 1, 1, 1}));
  RationalFn rhs = (Term(make_rational(1, 3)) * sym::one_minus_q(2) * sym::qi(3)).to_rational_fn();
  EXPECT_TRUE(congruent_mod(lhs, rhs, Modulus::phi_power(3, 2)).holds());
  EXPECT_TRUE(congruent_mod(lhs, rhs, cyclotomic(3).pow(2)).holds());
}

TEST(Congruence, FastAndGeneralPathsAgree)
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    RationalFn a = random_value(rng, 5);
    RationalFn b = a + RationalFn(cyclotomic(5).pow(2)) * random_value(rng, 5);
    if (trial % 3 == 0) b = b + RationalFn(cyclotomic(5));
    auto fast = congruent_mod(a, b, Modulus::phi_power(5, 2));
    auto general = congruent_mod(a, b, cyclotomic(5).pow(2));
    EXPECT_EQ(fast.verdict, general.verdict);
  }
}

TEST(CongruenceProperty, ReflexiveSymmetricTransitive)
{
  std::mt19937_64 rng(2024);
  const Modulus m = Modulus::phi_power(5, 1);
  int transitive_chains = 0;
  for (int trial = 0; trial < 150; ++trial) {
    RationalFn a = random_value(rng, 5);
    RationalFn b = trial % 2 == 0 ? a + RationalFn(cyclotomic(5)) * random_value(rng, 5) : random_value(rng, 5);
    RationalFn c = trial % 3 != 0 ? b + RationalFn(cyclotomic(5)) * random_value(rng, 5) : random_value(rng, 5);
    EXPECT_TRUE(congruent_mod(a, a, m).holds());
    auto ab = congruent_mod(a, b, m), ba = congruent_mod(b, a, m), bc = congruent_mod(b, c, m);
    EXPECT_EQ(ab.verdict, ba.verdict);
    if (ab.holds() && bc.holds()) {
      ++transitive_chains;
      EXPECT_TRUE(congruent_mod(a, c, m).holds());
    }
  }
  EXPECT_GT(transitive_chains, 30);
}

TEST(CongruenceProperty, ScalingByUnits)
{
  std::mt19937_64 rng(77);
  const Modulus m = Modulus::phi_power(7, 1);
  int scaled = 0;
  for (int trial = 0; trial < 100; ++trial) {
    RationalFn a = random_value(rng, 7);
    RationalFn b = a + RationalFn(cyclotomic(7)) * random_value(rng, 7);
    RationalFn c = random_value(rng, 7);
    if (c.is_zero() || divides_exactly(cyclotomic(7), c.num().primitive_part()).divides) continue;
    ASSERT_TRUE(congruent_mod(a, b, m).holds());
    EXPECT_TRUE(congruent_mod(c * a, c * b, m).holds());
    ++scaled;
  }
  EXPECT_GT(scaled, 50);
}

TEST(Modulus, FromTermAndExpansion)
{
  Modulus m = Modulus::from_term(Term::one_plus_qpow(1).pow(2) * sym::qi(3) * sym::B(2, 1), "sun n=1");
  EXPECT_EQ(m.expand(), IntPoly({1, 1}).pow(3) * q_int(3));
  EXPECT_EQ(m.degree(), 5);
  EXPECT_EQ(Modulus::qint_phi_power(9, 2).expand(), q_int(9) * cyclotomic(9).pow(2));
  EXPECT_THROW(Modulus::from_term(sym::qp(-1), "x"), std::invalid_argument);
}

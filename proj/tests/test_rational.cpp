#include "superhopf/rational.hpp"

#include <gtest/gtest.h>

#include <random>

using superhopf::rational;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(rational(6, -4).str(), "-3/2");
  EXPECT_EQ(rational(0, 5).str(), "0");
  EXPECT_EQ(rational::parse("-10/4"), rational(-5, 2));
  EXPECT_TRUE(rational(4, 2).is_integer());
  EXPECT_THROW(rational(1, 0), std::domain_error);
  EXPECT_THROW(rational::parse("1/0"), std::domain_error);
  EXPECT_THROW(rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(rational::parse("x"), std::invalid_argument);
  EXPECT_THROW(rational().inverse(), std::domain_error);
}

TEST(Rational, OverflowSpillsToGmpAndComesBack) {
  rational big(std::numeric_limits<long long>::max());
  rational sq = big * big;
  EXPECT_FALSE(sq.is_small());
  EXPECT_EQ(sq.to_mpq(), mpq_class(mpz_class("85070591730234615847396907784232501249")));
  rational back = sq / big;
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, big);
  rational m(std::numeric_limits<long long>::min());
  EXPECT_EQ((-m).to_mpq(), -mpq_class(mpz_class("-9223372036854775808")));
  EXPECT_EQ(rational::parse(sq.str()), sq);
}

// Oracle: GMP rationals directly.
TEST(Rational, RandomArithmeticMatchesGmp) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> small(-50, 50);
  std::uniform_int_distribution<long> huge(std::numeric_limits<long>::min() / 2, std::numeric_limits<long>::max() / 2);
  for (int trial = 0; trial < 4000; ++trial) {
    auto draw = [&](bool big) {
      long n = big ? huge(rng) : small(rng);
      long d = big ? huge(rng) : small(rng);
      if (d == 0) d = 1;
      return std::pair<rational, mpq_class>{rational(n, d), [&] {
                                              mpq_class q{mpz_class(n), mpz_class(d)};
                                              q.canonicalize();
                                              return q;
                                            }()};
    };
    auto [a, qa] = draw(trial % 3 == 0);
    auto [b, qb] = draw(trial % 5 == 0);
    EXPECT_EQ((a + b).to_mpq(), qa + qb);
    EXPECT_EQ((a - b).to_mpq(), qa - qb);
    EXPECT_EQ((a * b).to_mpq(), qa * qb);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b).to_mpq(), qa / qb);
    }
    EXPECT_EQ(a < b, qa < qb);
    EXPECT_EQ(a == b, qa == qb);
    EXPECT_EQ(rational((a * b).to_mpq()), a * b);
  }
}

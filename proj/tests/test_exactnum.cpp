#include <gtest/gtest.h>

#include <thread>

#include "geopoly/errors.hpp"
#include "geopoly/rational.hpp"
#include "geopoly/residue.hpp"
#include "oracles.hpp"

using namespace geopoly;

TEST(Rational, CanonicalForm) {
  const Rational a(BigInt(6), BigInt(-4));
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("7/3"), Rational(7, 3));
  EXPECT_EQ(Rational::parse("-12"), Rational(-12));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("1e-30"), Rational(BigInt(1), oracle::ipow(10, 30)));
  EXPECT_EQ(Rational::parse("2.5e2"), Rational(250));
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::domain_error);
}

TEST(Rational, PowAndInverse) {
  EXPECT_EQ(Rational(0).pow(0), Rational(1));
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(-5, 7).inverse(), Rational(-7, 5));
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, FieldAxiomsProperty) {
  oracle::RationalGen gen(11);
  for (int i = 0; i < 500; ++i) {
    const Rational a = gen.next(), b = gen.next(), c = gen.next();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::parse(a.to_string()), a);
    EXPECT_EQ((a < b), (a - b).sign() < 0);
  }
}

TEST(Residue, PrimalityMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 5000; ++n) EXPECT_EQ(is_prime(n), oracle::is_prime_trial(n)) << n;
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1000001));
  EXPECT_TRUE(is_prime(2305843009213693951ULL));  // 2^61 - 1
  EXPECT_FALSE(is_prime(3215031751ULL));          // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Residue, RationalResidueExamples) {
  EXPECT_EQ(rational_residue(Rational(1, 12), 5).value(), 3u);
  EXPECT_EQ(rational_residue(Rational(7), 7).value(), 0u);
  EXPECT_THROW(rational_residue(Rational(1, 5), 5), DenominatorDivisibleByQ);
  EXPECT_EQ(rational_residue(Rational(-1, 2), 7).value(), 3u);
  EXPECT_THROW(ResidueModQ(1, 9), NotPrime);
}

TEST(Residue, HomomorphismProperty) {
  oracle::RationalGen gen(5);
  for (std::uint64_t q : {7ULL, 11ULL, 13ULL, 1000003ULL}) {
    for (int i = 0; i < 200; ++i) {
      const Rational a = gen.next(50, 6), b = gen.next(50, 6);
      const auto ra = rational_residue(a, q), rb = rational_residue(b, q);
      EXPECT_EQ(rational_residue(a + b, q), ra + rb);
      EXPECT_EQ(rational_residue(a * b, q), ra * rb);
      EXPECT_EQ(rational_residue(-a, q), -ra);
      if (ra.value() != 0) {
        EXPECT_EQ((ra * ra.inverse()).value(), 1u);
      }
    }
  }
}

TEST(Residue, ModHelpers) {
  EXPECT_EQ(mod_reduce(BigInt(-7), 5), 3u);
  EXPECT_EQ(pow_mod(3, 4, 7), 4u);
  EXPECT_EQ(mul_mod(~0ULL, ~0ULL, 1000000007ULL), static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(~0ULL) * ~0ULL) % 1000000007ULL));
}

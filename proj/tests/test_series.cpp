#include <gtest/gtest.h>

#include "geopoly/errors.hpp"
#include "geopoly/geomfamily.hpp"
#include "geopoly/series.hpp"
#include "oracles.hpp"

using namespace geopoly;

namespace {

const Rational kTol30 = Rational::parse("1e-30");
const Rational kTol20 = Rational::parse("1e-20");

// Plain partial sum of the first `terms` terms, no bounding.
Rational dobinski_partial(unsigned n, long r, const Rational& y, long terms) {
  Rational s(0);
  for (long k = 0; k < terms; ++k) {
    s += Rational(oracle::ipow(k + r, n) * oracle::binom(k + r - 1, k)) * y.pow(k);
  }
  return s;
}

}  // namespace

TEST(Dobinski, Examples) {
  EXPECT_TRUE(sum_dobinski_geometric(0, 1, Rational(1, 2), kTol30).contains(Rational(2)));
  const CertifiedValue v = sum_dobinski_geometric(2, 1, Rational(1, 2), kTol30);
  EXPECT_EQ(dobinski_closed_form(2, 1, Rational(1, 2)), Rational(12));
  EXPECT_TRUE(v.contains(Rational(12)));
  EXPECT_LE(v.tail_radius, kTol30);
  EXPECT_TRUE(sum_dobinski_geometric(1, 2, Rational(1, 3), kTol30).contains(Rational(27, 4)));
  EXPECT_EQ(dobinski_closed_form(1, 2, Rational(1, 3)), Rational(27, 4));
  EXPECT_EQ(dobinski_closed_form(3, 2, Rational(-1, 2)), Rational(16, 81));
}

TEST(Dobinski, PartialSumMatchesBruteForce) {
  const CertifiedValue v = sum_dobinski_geometric(3, 2, Rational(1, 3), kTol20);
  EXPECT_EQ(v.partial_sum, dobinski_partial(3, 2, Rational(1, 3), v.terms_used));
}

TEST(Dobinski, Errors) {
  EXPECT_THROW(sum_dobinski_geometric(1, 1, Rational(2), kTol30), DivergentInput);
  EXPECT_THROW(sum_dobinski_geometric(1, 1, Rational(-1), kTol30), DivergentInput);
  EXPECT_THROW(sum_dobinski_geometric(1, 1, Rational(0), kTol30), ParameterOutOfDomain);
  EXPECT_THROW(sum_dobinski_geometric(1, 0, Rational(1, 2), kTol30), InvalidOrder);
  EXPECT_THROW(sum_dobinski_geometric(1, 1, Rational(1, 2), Rational(0)), ParameterOutOfDomain);
}

// y close to 1 with a huge n needs more than the term cap.
TEST(Dobinski, TermCap) {
  EXPECT_THROW(sum_dobinski_geometric(1, 1, Rational(999999, 1000000), kTol30), TolNotReached);
}

TEST(PowerBinomial, Examples) {
  EXPECT_TRUE(sum_power_binomial(0, 2, Rational(1, 2), kTol30).contains(Rational(4)));
  EXPECT_TRUE(sum_power_binomial(1, 1, Rational(1, 2), kTol30).contains(Rational(2)));
  EXPECT_EQ(power_binomial_closed_form(1, 1, Rational(1, 2)), Rational(2));
  EXPECT_EQ(power_binomial_closed_form(0, 2, Rational(1, 2)), Rational(4));
  const Rational cf = power_binomial_closed_form(3, 2, Rational(1, 3));
  EXPECT_TRUE(sum_power_binomial(3, 2, Rational(1, 3), kTol30).contains(cf));
  EXPECT_THROW(sum_power_binomial(1, 1, Rational(3, 2), kTol30), DivergentInput);
}

TEST(ExpCertified, Examples) {
  const CertifiedValue zero = exp_certified(Rational(0), kTol30);
  EXPECT_EQ(zero.partial_sum, Rational(1));
  EXPECT_EQ(zero.tail_radius, Rational(0));
  // e lies in (2.718281828459045235360287471352, 2.718281828459045235360287471353)
  const CertifiedValue e = exp_certified(Rational(1), kTol20);
  EXPECT_LE(e.tail_radius, kTol20);
  EXPECT_GT(e.upper(), Rational::parse("2.71828182845904523536028"));
  EXPECT_LT(e.lower(), Rational::parse("2.71828182845904523536029"));
  // e^{-1/2} = 0.60653065971263342360379953499118...
  const CertifiedValue h = exp_certified(Rational(-1, 2), kTol20);
  EXPECT_GT(h.upper(), Rational::parse("0.606530659712633423603799"));
  EXPECT_LT(h.lower(), Rational::parse("0.606530659712633423603800"));
  // e * e^{-1} = 1 as an interval product.
  const CertifiedValue m = exp_certified(Rational(-1), kTol20);
  EXPECT_LE(e.lower() * m.lower(), Rational(1));
  EXPECT_GE(e.upper() * m.upper(), Rational(1));
}

TEST(RbellDobinski, Examples) {
  EXPECT_TRUE(check_rbell_dobinski(0, 0, Rational(1), kTol20).pass);
  const RbellDobinskiResult b = check_rbell_dobinski(1, 2, Rational(1), kTol20);
  EXPECT_TRUE(b.pass);
  EXPECT_EQ(b.phi, Rational(3));
  EXPECT_TRUE(check_rbell_dobinski(3, 1, Rational(1, 2), kTol20).pass);
  EXPECT_THROW(check_rbell_dobinski(1, 1, Rational(0), kTol20), ParameterOutOfDomain);
}

TEST(RbellDobinski, CombinedWidthWithinTolerance) {
  const RbellDobinskiResult r = check_rbell_dobinski(4, 3, Rational(2), kTol20);
  EXPECT_TRUE(r.pass);
  EXPECT_LE(r.phi.abs() * r.exp_value.tail_radius + r.series_value.tail_radius, kTol20);
}

// A wrong value for phi must be rejected.
TEST(RbellDobinski, DetectsPerturbation) {
  const Rational y(1, 2);
  const CertifiedValue e = exp_certified(y, kTol20);
  const CertifiedValue s = sum_rbell_series(3, 1, y, kTol20);
  const Rational phi = rbell_poly(3, 1)(y) + Rational::parse("1e-15");
  const Rational gap = (phi * e.partial_sum - s.partial_sum).abs();
  EXPECT_GT(gap, phi * e.tail_radius + s.tail_radius);
}

TEST(Series, NestedRefinement) {
  for (const Rational& y : {Rational(1, 3), Rational(1, 2), Rational(-1, 2)}) {
    const CertifiedValue coarse = sum_dobinski_geometric(3, 2, y, kTol20);
    const CertifiedValue fine = sum_dobinski_geometric(3, 2, y, kTol20 / Rational(100));
    EXPECT_GE(fine.terms_used, coarse.terms_used);
    EXPECT_LT(fine.tail_radius, coarse.tail_radius);
    EXPECT_GE(fine.lower(), coarse.lower());
    EXPECT_LE(fine.upper(), coarse.upper());
  }
}

TEST(Series, ClosedFormContainment) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (long r = 1; r <= 4; ++r) {
      for (const Rational& y : {Rational(1, 3), Rational(1, 2), Rational(-1, 2)}) {
        EXPECT_TRUE(sum_dobinski_geometric(n, r, y, kTol30).contains(dobinski_closed_form(n, r, y)));
        EXPECT_TRUE(sum_power_binomial(n, r, y, kTol30).contains(power_binomial_closed_form(n, r, y)));
      }
    }
  }
}

#include <gtest/gtest.h>

#include "geopoly/errors.hpp"
#include "geopoly/poly.hpp"
#include "geopoly/trunc_series.hpp"
#include "oracles.hpp"

using namespace geopoly;

namespace {

UniPoly random_poly(oracle::RationalGen& gen, int max_degree) {
  std::vector<Rational> c;
  const long d = gen.integer(0, max_degree);
  for (long i = 0; i <= d; ++i) c.push_back(gen.next());
  return UniPoly(c);
}

std::vector<Rational> rs(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST(UniPoly, EvalExamples) {
  EXPECT_EQ(UniPoly(rs({0, 1, 2}))(Rational(1)), Rational(3));
  EXPECT_EQ(UniPoly()(Rational(17, 3)), Rational(0));
  EXPECT_EQ(poly_eval(BiPoly({{0, 1}, {1}}), Rational(1), Rational(5)), Rational(6));
}

TEST(UniPoly, TrimAndDegree) {
  EXPECT_EQ(UniPoly(rs({1, 0, 0})).degree(), 0);
  EXPECT_EQ(UniPoly(rs({0, 0})).degree(), -1);
  EXPECT_TRUE(UniPoly(rs({0})).is_zero());
  EXPECT_EQ(UniPoly(rs({0, 1, 6, 6})).to_string(), "y + 6*y^2 + 6*y^3");
}

TEST(UniPoly, IntegrateExamples) {
  EXPECT_EQ(integrate_unit(UniPoly(rs({0, -1, 2}))), Rational(1, 6));
  EXPECT_EQ(integrate_unit(UniPoly::constant(1)), Rational(1));
  EXPECT_EQ(integrate_unit(UniPoly(rs({0, -1}))), Rational(-1, 2));
}

TEST(UniPoly, GammaMomentExamples) {
  EXPECT_EQ(gamma_moment(UniPoly(rs({0, 1, 1})), 2), UniPoly(rs({0, 2, 6})));
  EXPECT_EQ(gamma_moment(UniPoly::constant(1), 3), UniPoly::constant(1));
  EXPECT_EQ(gamma_moment(UniPoly(rs({2, 1})), 2), UniPoly(rs({2, 2})));
  EXPECT_THROW(gamma_moment(UniPoly::constant(1), 0), InvalidOrder);
}

TEST(UniPoly, RingProperties) {
  oracle::RationalGen gen(3);
  for (int i = 0; i < 200; ++i) {
    const UniPoly a = random_poly(gen, 5), b = random_poly(gen, 5), c = random_poly(gen, 5);
    const Rational y = gen.next();
    EXPECT_EQ((a * b)(y), a(y) * b(y));
    EXPECT_EQ((a + b)(y), a(y) + b(y));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a.pow(3), a * a * a);
    const Rational s = gen.next(), t = gen.next();
    EXPECT_EQ(a.compose_affine(s, t)(y), a(s * y + t));
    EXPECT_EQ(antiderivative(a)(Rational(1)), integrate_unit(a));
  }
}

// Gamma moment of u^k is (r)_k y^k, so it is linear and matches the oracle on monomials.
TEST(UniPoly, GammaMomentLinearity) {
  oracle::RationalGen gen(8);
  for (int i = 0; i < 100; ++i) {
    const UniPoly a = random_poly(gen, 6), b = random_poly(gen, 6);
    const long r = gen.integer(1, 5);
    EXPECT_EQ(gamma_moment(a + b, r), gamma_moment(a, r) + gamma_moment(b, r));
    for (unsigned k = 0; k < 6; ++k) {
      EXPECT_EQ(gamma_moment(UniPoly::monomial(1, k), r), UniPoly::monomial(oracle::rising(Rational(r), k), k));
    }
  }
}

TEST(Interpolate, RecoversPolynomials) {
  oracle::RationalGen gen(21);
  for (int i = 0; i < 50; ++i) {
    const UniPoly p = random_poly(gen, 7);
    std::vector<Rational> nodes, values;
    for (long k = 0; k <= 7; ++k) {
      nodes.push_back(Rational(k - 3, 2));
      values.push_back(p(nodes.back()));
    }
    EXPECT_EQ(interpolate(nodes, values), p);
  }
}

TEST(Interpolate, Bivariate) {
  const BiPoly p({{1, 0, 2}, {0, 3}, {Rational(1, 2)}});
  std::vector<Rational> xs{0, 1, 2}, ys{-1, 0, 1};
  std::vector<std::vector<Rational>> values(3, std::vector<Rational>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) values[i][j] = p(xs[i], ys[j]);
  }
  EXPECT_EQ(interpolate(xs, ys, values), p);
  EXPECT_EQ(p.x_slice(1), UniPoly(rs({0, 3})));
}

TEST(TruncSeries, ReciprocalProperty) {
  oracle::RationalGen gen(4);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> c;
    for (int k = 0; k <= 8; ++k) c.push_back(gen.next());
    if (c[0].is_zero()) c[0] = 1;
    const TruncSeries s(8, c);
    TruncSeries one(8, {1});
    EXPECT_EQ(s * s.reciprocal(), one);
  }
  EXPECT_THROW(TruncSeries(3, {0, 1}).reciprocal(), std::domain_error);
}

TEST(TruncSeries, ExpLaw) {
  const Rational a(2, 3), b(-5, 4);
  EXPECT_EQ(TruncSeries::exp_linear(a, 10) * TruncSeries::exp_linear(b, 10), TruncSeries::exp_linear(a + b, 10));
  EXPECT_EQ(TruncSeries::expm1(10) + TruncSeries(10, {1}), TruncSeries::exp_linear(1, 10));
}

TEST(EgfReference, Examples) {
  EXPECT_EQ(egf_reference(1, 0, 1, 4).coefficients(), rs({1, 1, Rational(3, 2), Rational(13, 6), Rational(25, 8)}));
  EXPECT_EQ(egf_reference(0, 1, 7, 3).coefficients(), rs({1, 1, Rational(1, 2), Rational(1, 6)}));
  EXPECT_EQ(egf_reference(3, 0, 0, 3).coefficients(), rs({1, 0, 0, 0}));
}

TEST(EgfReference, MatchesOracleCoefficients) {
  for (unsigned r = 1; r <= 4; ++r) {
    for (const Rational& y : {Rational(1), Rational(-2), Rational(1, 2)}) {
      const TruncSeries s = egf_reference(r, 0, y, 10);
      for (unsigned n = 0; n <= 10; ++n) {
        EXPECT_EQ(s[n] * Rational(oracle::factorial(n)), oracle::geom_value(n, r, y)) << r << " " << n;
      }
    }
  }
}

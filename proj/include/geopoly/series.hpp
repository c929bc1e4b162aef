#pragma once

#include "geopoly/rational.hpp"

namespace geopoly {

/// Exact partial sum with a rigorous bound on the omitted tail.
struct CertifiedValue {
  Rational partial_sum;
  Rational tail_radius;
  long terms_used = 0;

  Rational lower() const { return partial_sum - tail_radius; }
  Rational upper() const { return partial_sum + tail_radius; }
  bool contains(const Rational& v) const { return lower() <= v && v <= upper(); }
};

inline constexpr long kSeriesTermCap = 1'000'000;

/// sum_k (k+r)^n C(k+r-1, k) y^k for 0 < |y| < 1.
CertifiedValue sum_dobinski_geometric(unsigned n, long r, const Rational& y, const Rational& tol);

/// sum_k k^n C(k+r-1, k) x^k for 0 < |x| < 1, with 0^0 = 1.
CertifiedValue sum_power_binomial(unsigned n, long r, const Rational& x, const Rational& tol);

/// Taylor sum of e^y.
CertifiedValue exp_certified(const Rational& y, const Rational& tol);

/// sum_k (k+r)^n y^k / k! for y > 0.
CertifiedValue sum_rbell_series(unsigned n, unsigned r, const Rational& y, const Rational& tol);

/// ((-1)^n / (1-y)^r) w_n^{(r)}(1/(y-1)).
Rational dobinski_closed_form(unsigned n, long r, const Rational& y);

/// w_n^{(r)}(x/(1-x)) / (1-x)^r.
Rational power_binomial_closed_form(unsigned n, long r, const Rational& x);

struct RbellDobinskiResult {
  bool pass = false;
  Rational phi;  // r-Bell polynomial value
  CertifiedValue exp_value;
  CertifiedValue series_value;
};

/// Checks that e^y * phi_{n,r}(y), as an interval, meets the certified
/// interval of sum_k (k+r)^n y^k / k!. Combined width is at most tol.
RbellDobinskiResult check_rbell_dobinski(unsigned n, unsigned r, const Rational& y, const Rational& tol);

}  // namespace geopoly

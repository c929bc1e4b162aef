#include "geopoly/series.hpp"

#include <algorithm>
#include <functional>

#include "geopoly/comb.hpp"
#include "geopoly/errors.hpp"
#include "geopoly/geomfamily.hpp"

namespace geopoly {

namespace {

void require_tol(const Rational& tol) {
  if (tol.sign() <= 0) throw ParameterOutOfDomain("tol must be positive");
}

void require_order(long r) {
  if (r < 1) throw InvalidOrder("r = " + std::to_string(r));
}

void require_unit_disc(const Rational& y, const char* name) {
  if (y.is_zero()) throw ParameterOutOfDomain(std::string(name) + " = 0 is excluded");
  if (y.abs() >= Rational(1)) throw DivergentInput(std::string("|") + name + "| >= 1");
}

// Sums term(k) for k = 0, 1, ... Once k >= start, ratio(k) bounds
// |t_{j+1}/t_j| for every j >= k and is nonincreasing in k, so the tail after
// index K is at most |t_K| rho/(1 - rho) with rho = ratio(K). Bounding starts
// when rho <= threshold < 1.
CertifiedValue certify(const std::function<Rational(long)>& term, const std::function<Rational(long)>& ratio,
                       long start, const Rational& threshold, const Rational& tol) {
  // ratio is nonincreasing, so if it is still above the threshold at the
  // last allowed index the cap is certain to be hit.
  if (ratio(std::max(start, kSeriesTermCap - 1)) > threshold) {
    throw TolNotReached("ratio threshold not reached within " + std::to_string(kSeriesTermCap) + " terms");
  }
  CertifiedValue out;
  for (long k = 0; k < kSeriesTermCap; ++k) {
    const Rational t = term(k);
    out.partial_sum += t;
    out.terms_used = k + 1;
    if (k < start) continue;
    const Rational rho = ratio(k);
    if (rho > threshold) continue;
    const Rational bound = t.abs() * rho / (Rational(1) - rho);
    if (bound <= tol) {
      out.tail_radius = bound;
      return out;
    }
  }
  throw TolNotReached("term cap of " + std::to_string(kSeriesTermCap) + " reached");
}

Rational binom(long top, long k) { return Rational(binomial(static_cast<unsigned>(top), k)); }

Rational int_power(long base, unsigned e) { return Rational(int_pow(base, e)); }

Rational half_way_to_one(const Rational& a) { return (Rational(1) + a) / Rational(2); }

}  // namespace

CertifiedValue sum_dobinski_geometric(unsigned n, long r, const Rational& y, const Rational& tol) {
  require_order(r);
  require_tol(tol);
  require_unit_disc(y, "y");
  const Rational ay = y.abs();
  // t_{k+1}/t_k = ((k+r+1)/(k+r))^n (k+r)/(k+1) |y|, decreasing in k.
  auto term = [&](long k) { return int_power(k + r, n) * binom(k + r - 1, k) * y.pow(k); };
  auto ratio = [&](long k) {
    return Rational(k + r + 1, k + r).pow(n) * Rational(k + r, k + 1) * ay;
  };
  return certify(term, ratio, 0, half_way_to_one(ay), tol);
}

CertifiedValue sum_power_binomial(unsigned n, long r, const Rational& x, const Rational& tol) {
  require_order(r);
  require_tol(tol);
  require_unit_disc(x, "x");
  const Rational ax = x.abs();
  // For k >= 1: t_{k+1}/t_k = ((k+1)/k)^n (k+r)/(k+1) |x|, decreasing in k.
  auto term = [&](long k) { return int_power(k, n) * binom(k + r - 1, k) * x.pow(k); };
  auto ratio = [&](long k) { return Rational(k + 1, k).pow(n) * Rational(k + r, k + 1) * ax; };
  return certify(term, ratio, 1, half_way_to_one(ax), tol);
}

CertifiedValue exp_certified(const Rational& y, const Rational& tol) {
  require_tol(tol);
  if (y.is_zero()) return {Rational(1), Rational(0), 1};
  const Rational ay = y.abs();
  Rational t(1);
  auto term = [&](long k) {
    if (k > 0) t *= y / Rational(k);
    return t;
  };
  auto ratio = [&](long k) { return ay / Rational(k + 1); };
  return certify(term, ratio, 0, Rational(1, 2), tol);
}

CertifiedValue sum_rbell_series(unsigned n, unsigned r, const Rational& y, const Rational& tol) {
  require_tol(tol);
  if (y.sign() <= 0) throw ParameterOutOfDomain("y must be positive");
  const long lr = r;
  Rational scaled(1);  // y^k / k!
  auto term = [&](long k) {
    if (k > 0) scaled *= y / Rational(k);
    return int_power(k + lr, n) * scaled;
  };
  // For k + r >= 1: t_{k+1}/t_k = ((k+r+1)/(k+r))^n y/(k+1), decreasing in k.
  auto ratio = [&](long k) { return Rational(k + lr + 1, k + lr).pow(n) * y / Rational(k + 1); };
  return certify(term, ratio, r == 0 ? 1 : 0, Rational(1, 2), tol);
}

Rational dobinski_closed_form(unsigned n, long r, const Rational& y) {
  require_order(r);
  if (y == Rational(1)) throw DivergentInput("y = 1");
  const Rational one(1);
  const Rational sign = (n % 2 == 0) ? one : -one;
  return sign / (one - y).pow(r) * geom_poly_cached(n, r)(one / (y - one));
}

Rational power_binomial_closed_form(unsigned n, long r, const Rational& x) {
  require_order(r);
  if (x == Rational(1)) throw DivergentInput("x = 1");
  const Rational one(1);
  return geom_poly_cached(n, r)(x / (one - x)) / (one - x).pow(r);
}

RbellDobinskiResult check_rbell_dobinski(unsigned n, unsigned r, const Rational& y, const Rational& tol) {
  require_tol(tol);
  if (y.sign() <= 0) throw ParameterOutOfDomain("y must be positive");
  RbellDobinskiResult out;
  out.phi = rbell_poly(n, r)(y);
  const Rational scale = std::max(Rational(1), out.phi.abs());
  out.exp_value = exp_certified(y, tol / (Rational(4) * scale));
  out.series_value = sum_rbell_series(n, r, y, tol / Rational(4));
  const Rational gap = (out.phi * out.exp_value.partial_sum - out.series_value.partial_sum).abs();
  out.pass = gap <= out.phi.abs() * out.exp_value.tail_radius + out.series_value.tail_radius;
  return out;
}

}  // namespace geopoly

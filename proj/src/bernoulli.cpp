#include "geopoly/bernoulli.hpp"

#include <stdexcept>
#include <string>

#include "geopoly/comb.hpp"
#include "geopoly/errors.hpp"
#include "geopoly/geomfamily.hpp"

namespace geopoly {

Rational BernoulliCache::get(unsigned n) {
  std::lock_guard lock(mutex_);
  while (values_.size() <= n) {
    // B_m = -(1/(m+1)) sum_{k<m} C(m+1,k) B_k, the n = m+1 row of the recursion.
    const auto m = static_cast<unsigned>(values_.size());
    Rational acc;
    for (unsigned k = 0; k < m; ++k) acc += Rational(binomial(m + 1, k)) * values_[k];
    values_.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return values_[n];
}

BernoulliCache& BernoulliCache::instance() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli(unsigned n) { return BernoulliCache::instance().get(n); }

Rational pbernoulli_explicit(unsigned n, unsigned p) {
  Rational sum;
  for (unsigned k = 0; k <= n; ++k) {
    Rational term = Rational(stirling2r(n + p, k + p, p)) * Rational(factorial(k + p)) /
                    Rational(static_cast<long>(k + p + 1));
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum * Rational(static_cast<long>(p + 1)) / Rational(factorial(p));
}

PBernoulliValue pbernoulli(unsigned n, unsigned p) { return {n, p, pbernoulli_explicit(n, p)}; }

Rational pbernoulli_via_stirling1(unsigned n, unsigned p) {
  Rational sum;
  for (unsigned k = 0; k <= p; ++k) {
    Rational term = Rational(stirling1r(p, k)) * bernoulli(n + k);
    if (k % 2 == 1) term = -term;
    sum += term;
  }
  return sum * Rational(static_cast<long>(p + 1)) / Rational(factorial(p));
}

Rational tangent_closed_form(unsigned n) {
  return Rational(2, static_cast<long>(n + 1)) * (Rational(1) - Rational(int_pow(2, n + 1))) * bernoulli(n + 1);
}

Rational tangent_check(unsigned n) {
  if (n < 1) throw ParameterOutOfDomain("tangent check needs n >= 1");
  const Rational value = geom_poly(n, 1)(Rational(-1, 2));
  if (value != tangent_closed_form(n)) {
    throw std::logic_error("w_" + std::to_string(n) + "(-1/2) disagrees with the Bernoulli closed form");
  }
  return value;
}

}  // namespace geopoly

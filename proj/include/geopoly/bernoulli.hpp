#pragma once

#include <mutex>
#include <vector>

#include "geopoly/rational.hpp"

namespace geopoly {

/// Grow-only cache of Bernoulli numbers with B_1 = -1/2, filled from
/// B_0 = 1 and sum_{k<n} B_k / (k!(n-k)!) = 0 for n >= 2.
class BernoulliCache {
 public:
  Rational get(unsigned n);

  /// Shared process-wide instance.
  static BernoulliCache& instance();

 private:
  std::mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

Rational bernoulli(unsigned n);

struct PBernoulliValue {
  unsigned n;
  unsigned p;
  Rational value;
};

/// B_{n,p} = ((p+1)/p!) sum_k {n+p, k+p}_p (-1)^k (k+p)! / (k+p+1).
Rational pbernoulli_explicit(unsigned n, unsigned p);

/// B_{n,p} through the explicit route.
PBernoulliValue pbernoulli(unsigned n, unsigned p);

/// B_{n,p} recovered from sum_k [p,k] (-1)^k B_{n+k} = (p!/(p+1)) B_{n,p}.
Rational pbernoulli_via_stirling1(unsigned n, unsigned p);

/// w_n(-1/2) evaluated from the geometric polynomial; throws std::logic_error
/// if it disagrees with (2/(n+1))(1 - 2^{n+1}) B_{n+1}. Requires n >= 1.
Rational tangent_check(unsigned n);

/// The Bernoulli closed form (2/(n+1))(1 - 2^{n+1}) B_{n+1}.
Rational tangent_closed_form(unsigned n);

}  // namespace geopoly

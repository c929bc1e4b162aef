#pragma once

#include "geopoly/poly.hpp"

namespace geopoly {

// Constructors for the geometric polynomial families. Each family has at
// least two independent construction routes so they can be cross-checked.
// Orders r are positive integers; r < 1 throws InvalidOrder.

/// Exponential (Bell) polynomial: sum_k {n,k} y^k.
UniPoly exp_poly(unsigned n);

/// r-Bell polynomial: sum_k {n+r, k+r}_r y^k.
UniPoly rbell_poly(unsigned n, unsigned r);

/// Higher-order geometric polynomial w_n^{(r)}(y) = sum_k {n,k} (r)_k y^k.
UniPoly geom_poly(unsigned n, long r);

/// Same polynomial via r-Stirling numbers in the shifted basis (y+1)^k,
/// expanded back into powers of y.
UniPoly geom_poly_explicit(unsigned n, long r);

/// Two-variable polynomial w_n^{(r)}(x; y) = sum_k C(n,k) w_k^{(r)}(y) x^{n-k}.
BiPoly geom_two_var(unsigned n, long r);

/// Memoized geom_poly; the returned reference stays valid for the process
/// lifetime. Safe to call concurrently.
const UniPoly& geom_poly_cached(unsigned n, long r);

/// w_n^{(r)}(1); always a nonnegative integer.
Rational geom_number(unsigned n, long r);

}  // namespace geopoly

#include "geopoly/geomfamily.hpp"

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "geopoly/comb.hpp"
#include "geopoly/errors.hpp"

namespace geopoly {

namespace {

void require_order(long r) {
  if (r < 1) throw InvalidOrder("order must be a positive integer, got " + std::to_string(r));
}

}  // namespace

UniPoly exp_poly(unsigned n) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = Rational(stirling2r(n, k));
  return UniPoly(std::move(c));
}

UniPoly rbell_poly(unsigned n, unsigned r) {
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = Rational(stirling2r(n + r, k + r, r));
  return UniPoly(std::move(c));
}

UniPoly geom_poly(unsigned n, long r) {
  require_order(r);
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) c[k] = Rational(stirling2r(n, k)) * pochhammer(Rational(r), k);
  return UniPoly(std::move(c));
}

UniPoly geom_poly_explicit(unsigned n, long r) {
  require_order(r);
  const auto ur = static_cast<unsigned>(r);
  // sum_k {n+r,k+r}_r (r)_k (-1)^{n+k} (y+1)^k, with (y+1)^k = sum_j C(k,j) y^j.
  std::vector<Rational> c(n + 1);
  for (unsigned k = 0; k <= n; ++k) {
    Rational weight = Rational(stirling2r(n + ur, k + ur, ur)) * pochhammer(Rational(r), k);
    if ((n + k) % 2 == 1) weight = -weight;
    if (weight.is_zero()) continue;
    for (unsigned j = 0; j <= k; ++j) c[j] += weight * Rational(binomial(k, j));
  }
  return UniPoly(std::move(c));
}

BiPoly geom_two_var(unsigned n, long r) {
  require_order(r);
  std::vector<std::vector<Rational>> grid(n + 1, std::vector<Rational>(n + 1));
  for (unsigned k = 0; k <= n; ++k) {
    const UniPoly wk = geom_poly(k, r);
    const Rational weight(binomial(n, k));
    for (std::size_t j = 0; j < wk.coefficients().size(); ++j) {
      grid[n - k][j] = weight * wk.coefficients()[j];
    }
  }
  return BiPoly(std::move(grid));
}

const UniPoly& geom_poly_cached(unsigned n, long r) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, long>, UniPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, r}); it != cache.end()) return it->second;
  }
  UniPoly p = geom_poly(n, r);
  std::lock_guard lock(mutex);
  return cache.try_emplace({n, r}, std::move(p)).first->second;
}

Rational geom_number(unsigned n, long r) { return geom_poly(n, r)(1); }

}  // namespace geopoly

#pragma once

#include <span>
#include <string>
#include <vector>

#include "geopoly/rational.hpp"

namespace geopoly {

/// Dense univariate polynomial over the rationals, coefficient k of y^k.
/// Trailing zeros are always trimmed; the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefficients);

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly monomial(const Rational& c, unsigned degree);
  /// a*y + b
  static UniPoly linear(const Rational& a, const Rational& b) { return UniPoly({b, a}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  Rational coefficient(std::size_t k) const;

  Rational operator()(const Rational& y) const;

  /// p(a*y + b).
  UniPoly compose_affine(const Rational& a, const Rational& b) const;

  UniPoly pow(unsigned exponent) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  UniPoly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  std::string to_string(const std::string& var = "y") const;

 private:
  void trim();

  std::vector<Rational> coefficients_;
};

/// Dense bivariate polynomial, entry [i][j] is the coefficient of x^i y^j.
/// Every row has the same length; trailing zero rows and columns are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<std::vector<Rational>> grid);

  bool is_zero() const { return grid_.empty(); }
  int x_degree() const { return static_cast<int>(grid_.size()) - 1; }
  int y_degree() const { return grid_.empty() ? -1 : static_cast<int>(grid_.front().size()) - 1; }
  const std::vector<std::vector<Rational>>& grid() const { return grid_; }
  Rational coefficient(std::size_t i, std::size_t j) const;

  Rational operator()(const Rational& x, const Rational& y) const;

  /// Coefficient polynomial (in y) of x^i.
  UniPoly x_slice(std::size_t i) const;

  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  std::string to_string() const;

 private:
  void trim();

  std::vector<std::vector<Rational>> grid_;
};

Rational poly_eval(const UniPoly& p, const Rational& y);
Rational poly_eval(const BiPoly& p, const Rational& x, const Rational& y);

/// Exact integral of p over [0, 1].
Rational integrate_unit(const UniPoly& p);

/// Antiderivative vanishing at 0.
UniPoly antiderivative(const UniPoly& p);

/// Maps sum c_k u^k to sum c_k (r)_k y^k, i.e. the moment transform
/// (1/Gamma(r)) * int_0^inf lambda^(r-1) p(y*lambda) e^(-lambda) d(lambda).
/// Throws InvalidOrder for r < 1.
UniPoly gamma_moment(const UniPoly& p, long r);

/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
/// Nodes must be distinct.
UniPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

/// Tensor-product interpolation: values[i][j] is the value at (xs[i], ys[j]).
BiPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys,
                   const std::vector<std::vector<Rational>>& values);

}  // namespace geopoly

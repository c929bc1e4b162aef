#pragma once

#include <vector>

#include "geopoly/rational.hpp"

namespace geopoly {

/// Power series in t truncated after t^N; arithmetic is closed at order N.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order);
  TruncSeries(unsigned order, std::vector<Rational> coefficients);

  /// e^{x t}: coefficients x^n / n!.
  static TruncSeries exp_linear(const Rational& x, unsigned order);
  /// e^t - 1.
  static TruncSeries expm1(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coefficients_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coefficients_; }
  const Rational& operator[](std::size_t n) const { return coefficients_.at(n); }

  TruncSeries& operator+=(const TruncSeries& o);
  TruncSeries& operator-=(const TruncSeries& o);
  TruncSeries& operator*=(const Rational& c);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
  friend TruncSeries operator*(TruncSeries a, const Rational& c) { return a *= c; }
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);

  /// Requires a nonzero constant term.
  TruncSeries reciprocal() const;
  TruncSeries pow(unsigned exponent) const;

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  void check_order(const TruncSeries& o) const;

  std::vector<Rational> coefficients_;
};

/// (1 - y(e^t - 1))^{-r} e^{x t} truncated at order N; coefficient n equals
/// w_n^{(r)}(x; y) / n!.
TruncSeries egf_reference(unsigned r, const Rational& x, const Rational& y, unsigned order);

}  // namespace geopoly

#include "geopoly/trunc_series.hpp"

#include <stdexcept>

namespace geopoly {

TruncSeries::TruncSeries(unsigned order) : coefficients_(order + 1) {}

TruncSeries::TruncSeries(unsigned order, std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  coefficients_.resize(order + 1);
}

TruncSeries TruncSeries::exp_linear(const Rational& x, unsigned order) {
  TruncSeries s(order);
  Rational term(1);
  for (unsigned n = 0; n <= order; ++n) {
    s.coefficients_[n] = term;
    term = term * x / Rational(static_cast<long>(n + 1));
  }
  return s;
}

TruncSeries TruncSeries::expm1(unsigned order) {
  TruncSeries s = exp_linear(1, order);
  s.coefficients_[0] = 0;
  return s;
}

void TruncSeries::check_order(const TruncSeries& o) const {
  if (o.coefficients_.size() != coefficients_.size()) {
    throw std::invalid_argument("truncated series of different order");
  }
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& o) {
  check_order(o);
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] += o.coefficients_[n];
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& o) {
  check_order(o);
  for (std::size_t n = 0; n < coefficients_.size(); ++n) coefficients_[n] -= o.coefficients_[n];
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  for (auto& a : coefficients_) a *= c;
  return *this;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  a.check_order(b);
  const std::size_t size = a.coefficients_.size();
  TruncSeries out(static_cast<unsigned>(size - 1));
  for (std::size_t i = 0; i < size; ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < size; ++j) {
      out.coefficients_[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return out;
}

TruncSeries TruncSeries::reciprocal() const {
  if (coefficients_[0].is_zero()) throw std::domain_error("reciprocal of series with zero constant term");
  const std::size_t size = coefficients_.size();
  TruncSeries out(static_cast<unsigned>(size - 1));
  const Rational inv0 = coefficients_[0].inverse();
  out.coefficients_[0] = inv0;
  for (std::size_t n = 1; n < size; ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += coefficients_[k] * out.coefficients_[n - k];
    out.coefficients_[n] = -acc * inv0;
  }
  return out;
}

TruncSeries TruncSeries::pow(unsigned exponent) const {
  TruncSeries result(order());
  result.coefficients_[0] = 1;
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

TruncSeries egf_reference(unsigned r, const Rational& x, const Rational& y, unsigned order) {
  const TruncSeries u = TruncSeries(order, {Rational(1)}) - TruncSeries::expm1(order) * y;
  return u.reciprocal().pow(r) * TruncSeries::exp_linear(x, order);
}

}  // namespace geopoly

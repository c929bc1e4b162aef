#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace geopoly {

using BigInt = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T v)  // NOLINT(google-explicit-constructor)
      : value_(from_integral(v)) {}
  Rational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Accepts "p/q", integers, decimals ("0.25") and scientific notation ("1e-30").
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const;
  Rational inverse() const;

  /// Integer power; negative exponents invert. 0^0 = 1.
  Rational pow(long exponent) const;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  template <std::integral T>
  static mpq_class from_integral(T v) {
    if constexpr (std::is_signed_v<T>) {
      return mpq_class(static_cast<long>(v));
    } else {
      return mpq_class(static_cast<unsigned long>(v));
    }
  }

  mpq_class value_{0};
};

std::string to_string(const BigInt& v);

}  // namespace geopoly

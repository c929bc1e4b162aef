#pragma once

#include <cstdint>
#include <string>

#include "geopoly/rational.hpp"

namespace geopoly {

/// Deterministic: trial division below 10^6, Miller-Rabin with the
/// 64-bit-complete witness set above.
bool is_prime(std::uint64_t n);

/// Residue class modulo a prime q; value is always reduced into [0, q).
class ResidueModQ {
 public:
  /// Throws NotPrime if q is not prime.
  ResidueModQ(std::int64_t value, std::uint64_t q);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return q_; }

  ResidueModQ operator+(const ResidueModQ& o) const;
  ResidueModQ operator*(const ResidueModQ& o) const;
  ResidueModQ operator-() const;
  /// Throws std::domain_error on the zero class.
  ResidueModQ inverse() const;

  friend bool operator==(const ResidueModQ&, const ResidueModQ&) = default;

 private:
  struct Unchecked {};
  ResidueModQ(std::uint64_t value, std::uint64_t q, Unchecked) : value_(value), q_(q) {}

  std::uint64_t value_;
  std::uint64_t q_;
};

/// (numerator * denominator^-1) mod q. Throws DenominatorDivisibleByQ when q
/// divides the denominator.
ResidueModQ rational_residue(const Rational& x, std::uint64_t q);

/// Non-negative remainder of an integer modulo m > 0.
std::uint64_t mod_reduce(const BigInt& v, std::uint64_t m);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

}  // namespace geopoly

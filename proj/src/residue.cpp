#include "geopoly/residue.hpp"

#include <array>
#include <stdexcept>

#include "geopoly/errors.hpp"

namespace geopoly {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

namespace {

constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

bool miller_rabin(std::uint64_t n) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Sufficient for every n < 2^64.
  constexpr std::array<std::uint64_t, 7> witnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
  for (std::uint64_t a : witnesses) {
    a %= n;
    if (a == 0) continue;
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  if (n >= kTrialDivisionLimit) return miller_rabin(n);
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t mod_reduce(const BigInt& v, std::uint64_t m) {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), BigInt(static_cast<unsigned long>(m)).get_mpz_t());
  return r.get_ui();
}

ResidueModQ::ResidueModQ(std::int64_t value, std::uint64_t q) : q_(q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q));
  const auto m = static_cast<std::int64_t>(q);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint64_t>(r);
}

ResidueModQ ResidueModQ::operator+(const ResidueModQ& o) const {
  if (o.q_ != q_) throw std::invalid_argument("residue moduli differ");
  return {(value_ + o.value_) % q_, q_, Unchecked{}};
}

ResidueModQ ResidueModQ::operator*(const ResidueModQ& o) const {
  if (o.q_ != q_) throw std::invalid_argument("residue moduli differ");
  return {mul_mod(value_, o.value_, q_), q_, Unchecked{}};
}

ResidueModQ ResidueModQ::operator-() const { return {(q_ - value_) % q_, q_, Unchecked{}}; }

ResidueModQ ResidueModQ::inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero residue");
  // Fermat, q prime.
  return {pow_mod(value_, q_ - 2, q_), q_, Unchecked{}};
}

ResidueModQ rational_residue(const Rational& x, std::uint64_t q) {
  if (!is_prime(q)) throw NotPrime(std::to_string(q));
  const std::uint64_t den = mod_reduce(x.denominator(), q);
  if (den == 0) {
    throw DenominatorDivisibleByQ("denominator of " + x.to_string() + " divisible by " + std::to_string(q));
  }
  const std::uint64_t num = mod_reduce(x.numerator(), q);
  const std::uint64_t value = mul_mod(num, pow_mod(den, q - 2, q), q);
  return ResidueModQ(static_cast<std::int64_t>(value), q);
}

}  // namespace geopoly

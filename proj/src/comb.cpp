#include "geopoly/comb.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace geopoly {

CombTable::CombTable(Kind kind, unsigned r_offset)
    : kind_(kind), r_(kind == Kind::binomial ? 0 : r_offset) {}

std::vector<BigInt> CombTable::next_row(unsigned n) const {
  // n is the absolute index of the row being appended; the previous row (if
  // any) is rows_.back().
  if (rows_.empty()) return {BigInt(1)};  // C(0,0), {r,r}_r, [r,r]_r
  const std::vector<BigInt>& prev = rows_.back();
  std::vector<BigInt> row(prev.size() + 1);
  // Local index i corresponds to k = r_ + i.
  for (std::size_t i = 0; i < row.size(); ++i) {
    const BigInt left = i >= 1 ? prev[i - 1] : BigInt(0);  // (n-1, k-1)
    const BigInt up = i < prev.size() ? prev[i] : BigInt(0);  // (n-1, k)
    switch (kind_) {
      case Kind::binomial:
        row[i] = left + up;
        break;
      case Kind::stirling2r:
        row[i] = left + BigInt(static_cast<unsigned long>(r_ + i)) * up;
        break;
      case Kind::stirling1r:
        row[i] = left + BigInt(static_cast<unsigned long>(n - 1)) * up;
        break;
    }
  }
  return row;
}

void CombTable::extend_to(unsigned n) const {
  const std::size_t needed = static_cast<std::size_t>(n - r_) + 1;
  {
    std::shared_lock lock(mutex_);
    if (rows_.size() >= needed) return;
  }
  std::unique_lock lock(mutex_);
  while (rows_.size() < needed) {
    const auto absolute = static_cast<unsigned>(r_ + rows_.size());
    rows_.push_back(next_row(absolute));
  }
}

BigInt CombTable::at(long n, long k) const {
  if (n < static_cast<long>(r_) || k < static_cast<long>(r_) || k > n) return 0;
  extend_to(static_cast<unsigned>(n));
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n) - r_][static_cast<std::size_t>(k) - r_];
}

std::vector<BigInt> CombTable::row(unsigned n) const {
  std::vector<BigInt> out(n + 1, BigInt(0));
  if (n < r_) return out;
  extend_to(n);
  std::shared_lock lock(mutex_);
  const auto& stored = rows_[n - r_];
  for (std::size_t i = 0; i < stored.size(); ++i) out[r_ + i] = stored[i];
  return out;
}

const CombTable& shared_table(CombTable::Kind kind, unsigned r_offset) {
  static std::mutex registry_mutex;
  static std::map<std::pair<CombTable::Kind, unsigned>, std::unique_ptr<CombTable>> registry;
  if (kind == CombTable::Kind::binomial) r_offset = 0;
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[{kind, r_offset}];
  if (!slot) slot = std::make_unique<CombTable>(kind, r_offset);
  return *slot;
}

BigInt binomial(unsigned n, long k) {
  return shared_table(CombTable::Kind::binomial).at(static_cast<long>(n), k);
}

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Rational pochhammer(const Rational& x, unsigned n) {
  Rational result(1);
  Rational term = x;
  for (unsigned i = 0; i < n; ++i) {
    result *= term;
    term += 1;
  }
  return result;
}

BigInt stirling2r(unsigned n, unsigned k, unsigned r) {
  return shared_table(CombTable::Kind::stirling2r, r).at(n, k);
}

BigInt stirling1r(unsigned n, unsigned k, unsigned r) {
  return shared_table(CombTable::Kind::stirling1r, r).at(n, k);
}

BigInt int_pow(long base, unsigned exponent) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), exponent);
  return r;
}

}  // namespace geopoly

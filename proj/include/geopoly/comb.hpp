#pragma once

#include <deque>
#include <shared_mutex>
#include <vector>

#include "geopoly/rational.hpp"

namespace geopoly {

/// Grow-only triangle of exact integers built by recurrence.
///
/// Entries are addressed by absolute indices (n, k). For the r-Stirling kinds
/// only n, k >= r are stored; anything else reads as zero, so {n+r, k+r}_r is
/// at(n + r, k + r). Rows are appended under a unique lock and never modified
/// afterwards, so concurrent readers only contend while a row is being added.
class CombTable {
 public:
  enum class Kind { binomial, stirling1r, stirling2r };

  CombTable(Kind kind, unsigned r_offset);

  CombTable(const CombTable&) = delete;
  CombTable& operator=(const CombTable&) = delete;

  Kind kind() const { return kind_; }
  unsigned r_offset() const { return r_; }

  BigInt at(long n, long k) const;

  /// Entries (n, k) for k = 0..n; zeros below the offset.
  std::vector<BigInt> row(unsigned n) const;

 private:
  void extend_to(unsigned n) const;
  std::vector<BigInt> next_row(unsigned n) const;  // caller holds the unique lock

  Kind kind_;
  unsigned r_;
  mutable std::shared_mutex mutex_;
  mutable std::deque<std::vector<BigInt>> rows_;  // rows_[i] is absolute row first_row() + i
};

/// Process-wide shared table for (kind, r).
const CombTable& shared_table(CombTable::Kind kind, unsigned r_offset = 0);

/// C(n, k); zero outside 0 <= k <= n.
BigInt binomial(unsigned n, long k);

BigInt factorial(unsigned n);

/// Rising factorial x(x+1)...(x+n-1); (x)_0 = 1.
Rational pochhammer(const Rational& x, unsigned n);

/// {n, k}_r with absolute indices; r = 0 gives the classical numbers.
BigInt stirling2r(unsigned n, unsigned k, unsigned r = 0);

/// [n, k]_r (unsigned) with absolute indices; r = 0 gives the classical numbers.
BigInt stirling1r(unsigned n, unsigned k, unsigned r = 0);

/// base^exponent with 0^0 = 1.
BigInt int_pow(long base, unsigned exponent);

}  // namespace geopoly

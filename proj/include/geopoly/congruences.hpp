#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geopoly/report.hpp"

namespace geopoly {

struct CongruenceInfo {
  std::string id;
  std::string statement;
  std::uint64_t default_prime_lo;
  std::uint64_t default_prime_hi;
  bool odd_prime_only;
  std::uint64_t min_prime;  // smallest prime the statement covers
};

const std::vector<CongruenceInfo>& congruence_catalog();
std::vector<std::string> congruence_ids();
const CongruenceInfo& congruence_info(const std::string& id);

/// Auxiliary integer parameters of one case: n, k, m, r, y as applicable.
using CongruenceParams = std::map<std::string, long>;

/// Evaluates one congruence case. The observed residue is computed twice,
/// once by exact rational arithmetic reduced mod q and once from tables built
/// natively mod q (or an independent route for Bernoulli-type checks); a
/// disagreement fails the case. Failing hypotheses give `inapplicable`, a
/// q-divisible denominator gives `denominator_divisible`.
CongruenceCase check_congruence(const std::string& id, std::uint64_t q, const CongruenceParams& params);

/// How the y parameter is sampled from [1, q-1] for polynomial checks.
struct YSampling {
  /// 0 means every y in [1, q-1]; otherwise up to this many evenly spaced values.
  unsigned count = 0;

  std::vector<long> values(std::uint64_t q) const;
};

struct PrimeRange {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
};

/// Sweeps every prime in the range (default: the check's own range) over the
/// check's auxiliary parameters. C-GROSS ignores the range and uses {2, 5}.
CheckReport sweep(const std::string& id, std::optional<PrimeRange> primes = std::nullopt, YSampling sampling = {});

/// w_n^{(r)}(y) mod q computed from Stirling numbers reduced mod q.
std::uint64_t geom_poly_mod(unsigned n, long r, long y, std::uint64_t q);

}  // namespace geopoly

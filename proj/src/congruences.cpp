#include "geopoly/congruences.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "geopoly/bernoulli.hpp"
#include "geopoly/comb.hpp"
#include "geopoly/errors.hpp"
#include "geopoly/geomfamily.hpp"
#include "geopoly/residue.hpp"

namespace geopoly {

namespace {

// Stirling triangles reduced mod q, built independently of the exact tables.
class ModTables {
 public:
  explicit ModTables(std::uint64_t q) : q_(q) {}

  std::uint64_t s2(unsigned n, long k) { return entry(second_, n, k, true); }
  std::uint64_t s1(unsigned n, long k) { return entry(first_, n, k, false); }

  static ModTables& for_prime(std::uint64_t q) {
    static std::mutex mutex;
    static std::map<std::uint64_t, std::unique_ptr<ModTables>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[q];
    if (!slot) slot = std::make_unique<ModTables>(q);
    return *slot;
  }

 private:
  std::uint64_t entry(std::vector<std::vector<std::uint64_t>>& rows, unsigned n, long k, bool second_kind) {
    if (k < 0 || k > static_cast<long>(n)) return 0;
    std::lock_guard lock(mutex_);
    if (rows.empty()) rows.push_back({1 % q_});
    while (rows.size() <= n) {
      const auto m = static_cast<unsigned>(rows.size());  // building row m
      const auto& prev = rows.back();
      std::vector<std::uint64_t> row(m + 1, 0);
      for (unsigned j = 0; j <= m; ++j) {
        const std::uint64_t left = j >= 1 ? prev[j - 1] : 0;
        const std::uint64_t up = j < prev.size() ? prev[j] : 0;
        const std::uint64_t weight = second_kind ? j % q_ : (m - 1) % q_;
        row[j] = (left + mul_mod(weight, up, q_)) % q_;
      }
      rows.push_back(std::move(row));
    }
    return rows[n][static_cast<std::size_t>(k)];
  }

  std::uint64_t q_;
  std::mutex mutex_;
  std::vector<std::vector<std::uint64_t>> first_;
  std::vector<std::vector<std::uint64_t>> second_;
};

std::uint64_t reduce(long v, std::uint64_t q) {
  const auto m = static_cast<long>(q);
  long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

long require(const CongruenceParams& params, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end()) throw ParameterOutOfDomain("missing parameter " + name);
  return it->second;
}

struct Observation {
  std::uint64_t exact = 0;
  std::uint64_t second = 0;
};

ResidueSet single(std::uint64_t q, std::uint64_t v) { return {q, {v}}; }

struct Outcome {
  bool applicable = true;
  std::string note;
  Observation observed;
  ResidueSet expected;
};

Outcome hypothesis_violated(std::string why) {
  Outcome o;
  o.applicable = false;
  o.note = std::move(why);
  return o;
}

Observation geom_observation(unsigned n, long r, long y, std::uint64_t q) {
  return {rational_residue(geom_poly_cached(n, r)(Rational(y)), q).value(), geom_poly_mod(n, r, y, q)};
}

bool divides(std::uint64_t q, long v) { return reduce(v, q) == 0; }

using Checker = Outcome (*)(std::uint64_t q, const CongruenceParams& p);

Outcome c32(std::uint64_t q, const CongruenceParams& p) {
  const long k = require(p, "k");
  if (k < 2 || k > static_cast<long>(q) - 1) throw ParameterOutOfDomain("k must lie in [2, q-1]");
  const auto uq = static_cast<unsigned>(q);
  return {true, {}, {mod_reduce(stirling1r(uq, static_cast<unsigned>(k)), q), ModTables::for_prime(q).s1(uq, k)},
          single(q, 0)};
}

Outcome c33(std::uint64_t q, const CongruenceParams& p) {
  const long k = require(p, "k");
  if (k < 2 || k > static_cast<long>(q) - 1) throw ParameterOutOfDomain("k must lie in [2, q-1]");
  const auto uq = static_cast<unsigned>(q);
  return {true, {}, {mod_reduce(stirling2r(uq, static_cast<unsigned>(k)), q), ModTables::for_prime(q).s2(uq, k)},
          single(q, 0)};
}

Outcome choward(std::uint64_t q, const CongruenceParams& p) {
  const long m = require(p, "m");
  const long k = require(p, "k");
  if (m < 0 || k < 0) throw ParameterOutOfDomain("m and k must be nonnegative");
  const auto uq = static_cast<unsigned>(q);
  const auto um = static_cast<unsigned>(m);
  const auto uk = static_cast<unsigned>(k);
  const BigInt rhs = stirling2r(um + 1, uk) + (k >= static_cast<long>(q) ? stirling2r(um, uk - uq) : BigInt(0));
  return {true,
          {},
          {mod_reduce(stirling2r(uq + um, uk), q), ModTables::for_prime(q).s2(uq + um, k)},
          single(q, mod_reduce(rhs, q))};
}

Outcome cl1(std::uint64_t q, const CongruenceParams& p) {
  const long y = require(p, "y");
  if (q == 2) return hypothesis_violated("stated for odd primes");
  return {true, {}, geom_observation(static_cast<unsigned>(q), 1, y, q), single(q, reduce(y, q))};
}

Outcome cl2(std::uint64_t q, const CongruenceParams& p) {
  const long n = require(p, "n");
  const long y = require(p, "y");
  if (n < 1) throw ParameterOutOfDomain("n must be >= 1");
  const auto un = static_cast<unsigned>(n);
  const std::uint64_t expected = rational_residue(geom_poly_cached(un, 1)(Rational(y)), q).value();
  return {true, {}, geom_observation(static_cast<unsigned>(q) + un - 1, 1, y, q), single(q, expected)};
}

Outcome ct3(std::uint64_t q, const CongruenceParams& p) {
  const long y = require(p, "y");
  if (q == 2) return hypothesis_violated("stated for odd primes");
  if (divides(q, 1 + y)) return hypothesis_violated("q divides 1 + y");
  return {true, {}, geom_observation(static_cast<unsigned>(q), static_cast<long>(q), y, q), single(q, 0)};
}

Outcome ct4(std::uint64_t q, const CongruenceParams& p) {
  const long n = require(p, "n");
  const long r = require(p, "r");
  const long y = require(p, "y");
  if (n < 1 || r < 1 || !divides(q, r)) throw ParameterOutOfDomain("needs n >= 1 and r a positive multiple of q");
  if (divides(q, y)) return hypothesis_violated("q divides y");
  return {true, {}, geom_observation(static_cast<unsigned>(n), r, y, q), single(q, 0)};
}

Outcome ct5(std::uint64_t q, const CongruenceParams& p) {
  const long r = require(p, "r");
  const long y = require(p, "y");
  if (r < 1 || reduce(r, q) != 1 % q) throw ParameterOutOfDomain("needs r = 1 (mod q), r >= 1");
  if (q == 2) return hypothesis_violated("stated for odd primes");
  if (divides(q, y)) return hypothesis_violated("q divides y");
  if (divides(q, 1 + y)) return hypothesis_violated("q divides 1 + y");
  return {true, {}, geom_observation(static_cast<unsigned>(q) - 1, r, y, q), single(q, 0)};
}

Outcome ct6(std::uint64_t q, const CongruenceParams& p) {
  const long r = require(p, "r");
  const long y = require(p, "y");
  if (q == 2) return hypothesis_violated("stated for odd primes");
  if (r < 1) throw ParameterOutOfDomain("needs r >= 1");
  std::uint64_t expected = 0;
  if (reduce(r, q) == 0) {
    expected = 0;
  } else if (reduce(r + 1, q) == 0) {
    expected = reduce(-y, q);
  } else {
    throw ParameterOutOfDomain("needs r = 0 or r = -1 (mod q)");
  }
  if (divides(q, y)) return hypothesis_violated("q divides y");
  return {true, {}, geom_observation(static_cast<unsigned>(q) + 1, r, y, q), single(q, expected)};
}

Outcome cvsc(std::uint64_t q, const CongruenceParams& p) {
  const long n = require(p, "n");
  if (n < 1) throw ParameterOutOfDomain("n must be >= 1");
  const auto two_n = static_cast<unsigned>(2 * n);
  const Rational qr(static_cast<long>(q));
  const Observation obs{rational_residue(qr * bernoulli(two_n), q).value(),
                        rational_residue(qr * pbernoulli_explicit(two_n, 0), q).value()};
  const bool divisible = (2 * n) % static_cast<long>(q - 1) == 0;
  return {true, {}, obs, single(q, divisible ? q - 1 : 0)};
}

Outcome cvscp(std::uint64_t q, const CongruenceParams& p) {
  const long n = require(p, "n");
  if (n < 1) throw ParameterOutOfDomain("n must be >= 1");
  if (q == 2) return hypothesis_violated("stated for odd primes");
  const auto two_n = static_cast<unsigned>(2 * n);
  const auto uq = static_cast<unsigned>(q);
  const Rational qr(static_cast<long>(q));
  const Observation obs{rational_residue(qr * pbernoulli_explicit(two_n, uq), q).value(),
                        rational_residue(qr * pbernoulli_via_stirling1(two_n, uq), q).value()};
  if ((2 * n) % static_cast<long>(q - 1) == 0) {
    return {true, "branch (q-1) | 2n", obs, single(q, rational_residue(Rational(-1, 2), q).value())};
  }
  // Sign-insensitive form: residue squared is 1, i.e. residue in {1, q-1}.
  return {true, "branch (q-1) does not divide 2n; sign recorded in lhs", obs, {q, {1, q - 1}}};
}

Outcome cqq(std::uint64_t q, const CongruenceParams&) {
  if (q <= 3) return hypothesis_violated("stated for primes q > 3");
  const auto uq = static_cast<unsigned>(q);
  const Rational qr(static_cast<long>(q));
  const Observation obs{rational_residue(qr * pbernoulli_explicit(uq, uq), q).value(),
                        rational_residue(qr * pbernoulli_via_stirling1(uq, uq), q).value()};
  return {true, {}, obs, single(q, rational_residue(Rational(1, 12), q).value())};
}

Outcome cqq1(std::uint64_t q, const CongruenceParams&) {
  if (q <= 3) return hypothesis_violated("stated for primes q > 3");
  const auto uq = static_cast<unsigned>(q);
  const Observation obs{rational_residue(pbernoulli_explicit(uq, uq + 1), q).value(),
                        rational_residue(pbernoulli_via_stirling1(uq, uq + 1), q).value()};
  return {true, {}, obs, single(q, rational_residue(Rational(1, 12), q).value())};
}

Outcome cgross(std::uint64_t q, const CongruenceParams& p) {
  const long n = require(p, "n");
  if (n < 0) throw ParameterOutOfDomain("n must be >= 0");
  if (q != 2 && q != 5) throw ParameterOutOfDomain("the mod-10 statement is split over q = 2 and q = 5");
  const auto un = static_cast<unsigned>(n);
  const std::uint64_t expected = rational_residue(geom_poly_cached(un, 1)(1), q).value();
  return {true, {}, geom_observation(un + 4, 1, 1, q), single(q, expected)};
}

struct CheckEntry {
  CongruenceInfo info;
  Checker checker;
  std::vector<std::string> params;
};

const std::vector<CheckEntry>& checks() {
  static const std::vector<CheckEntry> table = {
      {{"C-GROSS", "w_(n+4) = w_n (mod 10), checked mod 2 and mod 5, n >= 1", 2, 5, false, 2}, cgross, {"n"}},
      {{"C-32", "[q,k] = 0 (mod q), 2 <= k <= q-1", 2, 97, false, 2}, c32, {"k"}},
      {{"C-33", "{q,k} = 0 (mod q), 2 <= k <= q-1", 2, 97, false, 2}, c33, {"k"}},
      {{"C-HOWARD", "{q+m,k} = {m+1,k} + {m,k-q} (mod q)", 2, 31, false, 2}, choward, {"m", "k"}},
      {{"C-L1", "w_q(y) = y (mod q)", 3, 61, true, 3}, cl1, {"y"}},
      {{"C-L2", "w_(q+n-1)(y) = w_n(y) (mod q), n >= 1", 2, 61, false, 2}, cl2, {"n", "y"}},
      {{"C-T3", "w_q^(q)(y) = 0 (mod q) if q does not divide 1+y", 3, 31, true, 3}, ct3, {"y"}},
      {{"C-T4", "w_n^(r)(y) = 0 (mod q) for r = 0 (mod q), n >= 1, q not dividing y", 2, 31, false, 2}, ct4,
       {"r", "n", "y"}},
      {{"C-T5", "w_(q-1)^(r)(y) = 0 (mod q) for r = 1 (mod q), q not dividing y(1+y)", 3, 31, true, 3}, ct5,
       {"r", "y"}},
      {{"C-T6", "w_(q+1)^(r)(y) = 0 for r = 0, = -y for r = -1 (mod q)", 3, 31, true, 3}, ct6, {"r", "y"}},
      {{"C-VSC", "q B_2n = 0 or -1 (mod q) by whether (q-1) | 2n", 2, 61, false, 2}, cvsc, {"n"}},
      {{"C-VSCP", "q B_(2n,q) = -+1 or -1/2 (mod q) by whether (q-1) | 2n", 3, 31, true, 3}, cvscp, {"n"}},
      {{"C-QQ", "q B_(q,q) = 1/12 (mod q), q > 3", 5, 31, true, 5}, cqq, {}},
      {{"C-QQ1", "B_(q,q+1) = 1/12 (mod q), q > 3", 5, 31, true, 5}, cqq1, {}},
  };
  return table;
}

const CheckEntry& find_check(const std::string& id) {
  for (const auto& c : checks()) {
    if (c.info.id == id) return c;
  }
  throw UnknownIdentity(id);
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = lo; v <= hi; ++v) {
    if (is_prime(v)) out.push_back(v);
  }
  return out;
}

std::vector<CongruenceParams> aux_params(const std::string& id, std::uint64_t q, const YSampling& sampling) {
  std::vector<CongruenceParams> out;
  const auto lq = static_cast<long>(q);
  const std::vector<long> ys = sampling.values(q);
  if (id == "C-GROSS") {
    for (long n = 0; n <= 40; ++n) out.push_back({{"n", n}});
  } else if (id == "C-32" || id == "C-33") {
    for (long k = 2; k <= lq - 1; ++k) out.push_back({{"k", k}});
  } else if (id == "C-HOWARD") {
    for (long m = 0; m <= 10; ++m) {
      for (long k = 0; k <= lq + m; ++k) out.push_back({{"m", m}, {"k", k}});
    }
  } else if (id == "C-L1" || id == "C-T3") {
    for (long y : ys) out.push_back({{"y", y}});
  } else if (id == "C-L2") {
    for (long n = 1; n <= 10; ++n) {
      for (long y : ys) out.push_back({{"n", n}, {"y", y}});
    }
  } else if (id == "C-T4") {
    for (long r : {lq, 2 * lq}) {
      for (long n = 1; n <= 6; ++n) {
        for (long y : ys) out.push_back({{"r", r}, {"n", n}, {"y", y}});
      }
    }
  } else if (id == "C-T5") {
    for (long r : {1 + lq, 1 + 2 * lq}) {
      for (long y : ys) out.push_back({{"r", r}, {"y", y}});
    }
  } else if (id == "C-T6") {
    for (long r : {lq, 2 * lq, lq - 1, 2 * lq - 1}) {
      if (r < 1) continue;
      for (long y : ys) out.push_back({{"r", r}, {"y", y}});
    }
  } else if (id == "C-VSC") {
    for (long n = 1; n <= 30; ++n) out.push_back({{"n", n}});
  } else if (id == "C-VSCP") {
    for (long n = 1; n <= 10; ++n) out.push_back({{"n", n}});
  } else {
    out.push_back({});
  }
  return out;
}

}  // namespace

std::uint64_t geom_poly_mod(unsigned n, long r, long y, std::uint64_t q) {
  ModTables& tables = ModTables::for_prime(q);
  const std::uint64_t yq = reduce(y, q);
  std::uint64_t sum = 0;
  std::uint64_t rising = 1 % q;  // (r)_k mod q
  std::uint64_t ypow = 1 % q;
  for (unsigned k = 0; k <= n; ++k) {
    sum = (sum + mul_mod(mul_mod(tables.s2(n, k), rising, q), ypow, q)) % q;
    rising = mul_mod(rising, reduce(r + static_cast<long>(k), q), q);
    ypow = mul_mod(ypow, yq, q);
  }
  return sum;
}

std::vector<long> YSampling::values(std::uint64_t q) const {
  std::vector<long> out;
  const auto top = static_cast<long>(q) - 1;
  if (top < 1) return out;
  if (count == 0 || count >= static_cast<unsigned>(top)) {
    for (long y = 1; y <= top; ++y) out.push_back(y);
    return out;
  }
  if (count == 1) return {1};
  for (unsigned i = 0; i < count; ++i) {
    const long y = 1 + static_cast<long>(i) * (top - 1) / static_cast<long>(count - 1);
    if (out.empty() || out.back() != y) out.push_back(y);
  }
  return out;
}

const std::vector<CongruenceInfo>& congruence_catalog() {
  static const std::vector<CongruenceInfo> infos = [] {
    std::vector<CongruenceInfo> v;
    for (const auto& c : checks()) v.push_back(c.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> congruence_ids() {
  std::vector<std::string> ids;
  for (const auto& c : checks()) ids.push_back(c.info.id);
  return ids;
}

const CongruenceInfo& congruence_info(const std::string& id) { return find_check(id).info; }

CongruenceCase check_congruence(const std::string& id, std::uint64_t q, const CongruenceParams& params) {
  const CheckEntry& entry = find_check(id);
  if (!is_prime(q)) throw NotPrime(std::to_string(q));

  CongruenceCase c;
  c.id = id;
  c.params.push_back({"q", Rational(static_cast<long>(q))});
  for (const auto& name : entry.params) c.params.push_back({name, Rational(require(params, name))});
  if (id == "C-GROSS" && require(params, "n") == 0) {
    c.probe = true;
    c.note = "n = 0 lies outside the confirmed window n >= 1";
  }

  Outcome outcome;
  try {
    outcome = entry.checker(q, params);
  } catch (const DenominatorDivisibleByQ& e) {
    c.verdict = Verdict::denominator_divisible;
    c.note = e.what();
    return c;
  }
  if (!outcome.applicable) {
    c.verdict = Verdict::inapplicable;
    c.note = outcome.note;
    return c;
  }
  c.lhs = Rational(static_cast<long>(outcome.observed.exact));
  c.rhs = outcome.expected;
  if (!outcome.note.empty()) c.note = c.note.empty() ? outcome.note : c.note + "; " + outcome.note;
  if (outcome.observed.exact != outcome.observed.second) {
    c.verdict = Verdict::fail;
    c.note += (c.note.empty() ? "" : "; ") + std::string("evaluation paths disagree: second path gives ") +
              std::to_string(outcome.observed.second);
    return c;
  }
  c.verdict = outcome.expected.contains(outcome.observed.exact) ? Verdict::pass : Verdict::fail;
  return c;
}

CheckReport sweep(const std::string& id, std::optional<PrimeRange> primes, YSampling sampling) {
  const CheckEntry& entry = find_check(id);
  CheckReport report("congruences");
  std::vector<std::uint64_t> moduli;
  if (id == "C-GROSS") {
    moduli = {2, 5};
  } else {
    const PrimeRange range = primes.value_or(PrimeRange{entry.info.default_prime_lo, entry.info.default_prime_hi});
    moduli = primes_in(range.lo, range.hi);
  }
  for (std::uint64_t q : moduli) {
    for (const auto& params : aux_params(id, q, sampling)) report.add(check_congruence(id, q, params));
  }
  report.sort();
  return report;
}

}  // namespace geopoly

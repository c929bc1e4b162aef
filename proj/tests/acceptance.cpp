// Acceptance suite: prints one PASS/FAIL line per criterion. Every tolerance
// and time limit is fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "json.hpp"

#include "geopoly/bernoulli.hpp"
#include "geopoly/comb.hpp"
#include "geopoly/congruences.hpp"
#include "geopoly/geomfamily.hpp"
#include "geopoly/identities.hpp"
#include "geopoly/residue.hpp"
#include "geopoly/series.hpp"
#include "geopoly/trunc_series.hpp"
#include "oracles.hpp"

using namespace geopoly;

namespace {

constexpr double kLimit1 = 5.0;
constexpr double kLimit2 = 10.0;
constexpr double kLimit3 = 60.0;
constexpr double kLimit4 = 60.0;
constexpr double kLimit5 = 120.0;
constexpr double kLimit6 = 30.0;
constexpr double kLimit7 = 120.0;
const char* const kSeriesTol = "1e-30";
const char* const kRbellTol = "1e-20";

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = elapsed < limit_s;
  const bool pass = o.ok && in_time;
  if (!pass) ++failures;
  std::printf("criterion %d [%s]: %s (%.2fs, limit %.0fs)%s%s\n", number, title, pass ? "PASS" : "FAIL", elapsed,
              limit_s, o.detail.empty() ? "" : " ", o.detail.c_str());
  if (!in_time) std::printf("  time limit exceeded\n");
  std::fflush(stdout);
}

Outcome table_oracles() {
  for (unsigned n = 0; n <= 60; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      if (stirling2r(n, k) != oracle::stirling2_explicit(n, k)) {
        return {false, "second kind mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k)};
      }
    }
  }
  for (unsigned r = 0; r <= 5; ++r) {
    for (unsigned n = r; n <= 30; ++n) {
      UniPoly product = UniPoly::constant(1);
      for (unsigned i = r; i < n; ++i) product = product * UniPoly::linear(1, static_cast<long>(i));
      for (unsigned k = r; k <= n; ++k) {
        if (product.coefficient(k - r) != Rational(stirling1r(n, k, r))) {
          return {false, "first kind mismatch at n=" + std::to_string(n) + " r=" + std::to_string(r)};
        }
      }
    }
  }
  return {true, "second kind n<=60, first kind n<=30 r<=5"};
}

Outcome constructor_triangulation() {
  for (unsigned n = 0; n <= 12; ++n) {
    for (long r = 1; r <= 5; ++r) {
      const UniPoly w = geom_poly(n, r);
      if (w != geom_poly_explicit(n, r) || w != gamma_moment(exp_poly(n), r)) {
        return {false, "constructors disagree at n=" + std::to_string(n) + " r=" + std::to_string(r)};
      }
    }
  }
  for (unsigned r = 1; r <= 4; ++r) {
    for (const Rational& y : {Rational(1), Rational(-2), Rational(1, 2)}) {
      const TruncSeries s = egf_reference(r, 0, y, 16);
      for (unsigned n = 0; n <= 16; ++n) {
        if (s[n] * Rational(factorial(n)) != geom_poly(n, r)(y)) {
          return {false, "EGF coefficient mismatch at r=" + std::to_string(r) + " n=" + std::to_string(n)};
        }
      }
    }
  }
  return {true, "n<=12 r<=5; EGF N=16 r<=4"};
}

Outcome identity_suite() {
  const CheckReport report = run_suite(identity_ids(), IdentityGrid{}, 4);
  const Totals t = report.totals();
  std::ostringstream d;
  d << "cases=" << t.total << " pass=" << t.pass << " fail=" << t.fail << " inapplicable=" << t.inapplicable
    << " probes=" << t.probe_total;
  for (const CheckCase* c : report.failures()) {
    d << "\n  failed " << c->id;
    break;
  }
  return {t.fail == 0 && t.denominator_divisible == 0 && t.pass > 0, d.str()};
}

Outcome bernoulli_routes() {
  for (unsigned n = 0; n <= 20; ++n) {
    for (unsigned p = 0; p <= 8; ++p) {
      if (pbernoulli_explicit(n, p) != pbernoulli_via_stirling1(n, p)) {
        return {false, "routes disagree at n=" + std::to_string(n) + " p=" + std::to_string(p)};
      }
    }
  }
  for (std::uint64_t q = 2; q <= 61; ++q) {
    if (!is_prime(q)) continue;
    for (long n = 1; 2 * n <= 60; ++n) {
      const std::uint64_t res = rational_residue(Rational(static_cast<long>(q)) * bernoulli(2 * n), q).value();
      const bool divisible = (2 * n) % static_cast<long>(q - 1) == 0;
      if (res != (divisible ? q - 1 : 0)) {
        return {false, "von Staudt-Clausen class wrong at q=" + std::to_string(q) + " 2n=" + std::to_string(2 * n)};
      }
    }
  }
  return {true, "n<=20 p<=8; 2n<=60 primes<=61"};
}

Outcome congruence_sweeps() {
  struct Sweep {
    const char* id;
    PrimeRange range;
  };
  const Sweep sweeps[] = {{"C-L1", {3, 61}},  {"C-L2", {2, 61}},   {"C-32", {2, 97}},  {"C-33", {2, 97}},
                          {"C-T3", {3, 31}},  {"C-T4", {2, 31}},   {"C-T5", {3, 31}},  {"C-T6", {3, 31}},
                          {"C-QQ", {5, 31}},  {"C-QQ1", {5, 31}},  {"C-VSCP", {3, 31}}, {"C-GROSS", {2, 5}}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& s : sweeps) {
    const CheckReport r = sweep(s.id, s.range, YSampling{});
    const Totals t = r.totals();
    const bool good = r.ok() && t.pass > 0;
    ok = ok && good;
    d << "\n  " << s.id << ": " << (good ? "pass" : "FAIL") << " (pass=" << t.pass << " fail=" << t.fail
      << " inapplicable=" << t.inapplicable << " denominator_divisible=" << t.denominator_divisible << ")";
  }
  return {ok, d.str()};
}

Outcome certified_series() {
  const Rational tol = Rational::parse(kSeriesTol);
  const Rational rbell_tol = Rational::parse(kRbellTol);
  const Rational ys[] = {Rational(1, 3), Rational(1, 2), Rational(-1, 2)};
  std::size_t checked = 0;
  for (unsigned n = 0; n <= 6; ++n) {
    for (long r = 1; r <= 4; ++r) {
      for (const Rational& y : ys) {
        if (!sum_dobinski_geometric(n, r, y, tol).contains(dobinski_closed_form(n, r, y)) ||
            !sum_power_binomial(n, r, y, tol).contains(power_binomial_closed_form(n, r, y))) {
          return {false, "closed form outside interval at n=" + std::to_string(n) + " r=" + std::to_string(r) +
                             " y=" + y.to_string()};
        }
        checked += 2;
      }
    }
    // r-Bell Dobinski needs y > 0.
    for (unsigned r = 0; r <= 4; ++r) {
      for (const Rational& y : ys) {
        if (y.sign() <= 0) continue;
        if (!check_rbell_dobinski(n, r, y, rbell_tol).pass) {
          return {false, "r-Bell Dobinski check failed at n=" + std::to_string(n) + " r=" + std::to_string(r)};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " certified checks"};
}

std::string verify_cases(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  run_cli(args, out, err);
  const nlohmann::json j = nlohmann::json::parse(out.str());
  return j["cases"].dump();
}

Outcome determinism() {
  const std::string a = verify_cases({"verify", "--all", "--jobs", "1"});
  const std::string b = verify_cases({"verify", "--all", "--jobs", "4"});
  const std::string c = verify_cases({"verify", "--all"});
  if (a != b || a != c) return {false, "case listings differ between runs"};
  return {true, std::to_string(a.size()) + " bytes identical across 3 runs"};
}

}  // namespace

int main() {
  criterion(1, "table oracles", kLimit1, table_oracles);
  criterion(2, "constructor triangulation", kLimit2, constructor_triangulation);
  criterion(3, "identity suite", kLimit3, identity_suite);
  criterion(4, "Bernoulli routes", kLimit4, bernoulli_routes);
  criterion(5, "congruence sweeps", kLimit5, congruence_sweeps);
  criterion(6, "certified series", kLimit6, certified_series);
  criterion(7, "determinism", kLimit7, determinism);
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

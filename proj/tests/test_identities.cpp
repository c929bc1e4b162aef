#include <gtest/gtest.h>

#include "geopoly/errors.hpp"
#include "geopoly/identities.hpp"
#include "oracles.hpp"

using namespace geopoly;

namespace {

IdentityGrid small_grid() {
  IdentityGrid g;
  g.n_max = 5;
  g.m_max = 3;
  g.r_max = 3;
  g.p_max = 3;
  g.ys = {Rational(-2), Rational(-1, 2), Rational(1, 3), Rational(2)};
  return g;
}

const IdentityInfo& info(const std::string& id) {
  for (const auto& i : identity_catalog()) {
    if (i.id == id) return i;
  }
  throw std::out_of_range(id);
}

}  // namespace

TEST(Identities, Examples) {
  const CheckCase a = verify_identity("ID-11", {{"n", 1}, {"r1", 1}, {"r2", 1}, {"y", 2}});
  EXPECT_EQ(a.verdict, Verdict::pass);
  EXPECT_EQ(std::get<Rational>(a.lhs), Rational(4));
  EXPECT_EQ(std::get<Rational>(a.rhs), Rational(4));

  const CheckCase b = verify_identity("ID-16", {{"n", 1}, {"r", 1}, {"y", Rational(1, 2)}});
  EXPECT_EQ(b.verdict, Verdict::pass);
  EXPECT_EQ(std::get<Rational>(b.lhs), Rational(2));
}

TEST(Identities, BaseCaseNZero) {
  for (const auto& id : identity_ids()) {
    ParamMap m;
    for (const auto& p : info(id).params) m[p] = (p == "n" || p == "m" || p == "p") ? Rational(0) : Rational(1);
    const CheckCase c = verify_identity(id, m);
    EXPECT_NE(c.verdict, Verdict::fail) << id;
  }
}

TEST(Identities, EveryEntryPassesOnSmallGrid) {
  for (const auto& id : identity_ids()) {
    const CheckReport r = run_suite({id}, small_grid(), 2);
    const Totals t = r.totals();
    EXPECT_EQ(t.fail, 0u) << id;
    EXPECT_GT(t.pass, 0u) << id;
  }
}

TEST(Identities, EmptyIdListGivesEmptyReport) {
  const CheckReport r = run_suite({}, small_grid());
  EXPECT_TRUE(r.cases().empty());
  EXPECT_EQ(r.totals().total, 0u);
}

TEST(Identities, UnknownIdThrows) {
  EXPECT_THROW(verify_identity("NOPE", {}), UnknownIdentity);
  EXPECT_THROW(run_suite({"NOPE"}), UnknownIdentity);
  EXPECT_THROW(verify_identity("ID-2", {{"n", 1}}), ParameterOutOfDomain);
}

TEST(Identities, CatalogShape) {
  const auto ids = identity_ids();
  EXPECT_EQ(ids.size(), 21u);
  for (const auto& i : identity_catalog()) {
    if (i.probe) {
      EXPECT_NE(std::find(ids.begin(), ids.end(), i.parent), ids.end()) << i.id;
    }
  }
}

// n = 1 lies outside the window of ID-10: the main entry marks it inapplicable
// and the boundary probe records a failure for every p.
TEST(Identities, Id10BoundaryFlagged) {
  const CheckReport r = run_suite({"ID-10"}, small_grid());
  std::size_t boundary = 0;
  for (const auto& c : r.cases()) {
    const Rational n = c.params.front().value;
    if (c.id == "ID-10/boundary") {
      ++boundary;
      EXPECT_TRUE(c.probe);
      EXPECT_EQ(n, Rational(1));
      EXPECT_EQ(c.verdict, Verdict::fail);
    } else if (n <= Rational(1)) {
      EXPECT_EQ(c.verdict, Verdict::inapplicable);
    } else {
      EXPECT_EQ(c.verdict, Verdict::pass);
    }
  }
  EXPECT_EQ(boundary, 4u);
  EXPECT_TRUE(r.ok());
}

TEST(Identities, PrintedVariantsAreRecordedAsProbes) {
  for (const char* id : {"ID-7", "ID-19", "ID-29"}) {
    const Totals t = run_suite({id}, small_grid()).totals();
    EXPECT_EQ(t.fail, 0u) << id;
    EXPECT_GT(t.probe_fail, 0u) << id;
  }
}

TEST(Identities, SuiteIsDeterministicAcrossThreadCounts) {
  const auto ids = identity_ids();
  const std::string one = to_json(run_suite(ids, small_grid(), 1)).dump();
  const std::string many = to_json(run_suite(ids, small_grid(), 6)).dump();
  EXPECT_EQ(one, many);
}

// Reflection identity checked against values from the explicit Stirling oracle.
TEST(Identities, ReflectionAgainstOracle) {
  oracle::RationalGen gen(29);
  for (int i = 0; i < 40; ++i) {
    const auto n = static_cast<unsigned>(gen.integer(0, 7));
    const long r = gen.integer(1, 4);
    const Rational y = gen.next();
    Rational lhs(0);
    for (unsigned k = 0; k <= n; ++k) {
      lhs += Rational(oracle::binom(n, k)) * oracle::geom_value(k, r, y) * Rational(r).pow(n - k);
    }
    const Rational rhs = Rational(n % 2 ? -1 : 1) * oracle::geom_value(n, r, -y - Rational(1));
    EXPECT_EQ(lhs, rhs);
    const CheckCase c = verify_identity("ID-2", {{"n", n}, {"r", r}, {"y", y}});
    EXPECT_EQ(c.verdict, Verdict::pass);
    EXPECT_EQ(std::get<Rational>(c.rhs), rhs);
  }
}

// int_0^1 w_n(-y) dy = B_n, integrating the oracle polynomial term by term.
TEST(Identities, BernoulliIntegralAgainstOracle) {
  const auto b = oracle::bernoulli_table(12);
  for (unsigned n = 0; n <= 12; ++n) {
    Rational integral(0);
    for (unsigned k = 0; k <= n; ++k) {
      const Rational coeff = Rational(oracle::stirling2_explicit(n, k) * oracle::factorial(k));
      integral += coeff * Rational(k % 2 ? -1 : 1) / Rational(static_cast<long>(k + 1));
    }
    EXPECT_EQ(integral, b[n]) << n;
    EXPECT_EQ(verify_identity("ID-24", {{"n", n}}).verdict, n == 0 ? Verdict::inapplicable : Verdict::pass);
  }
}

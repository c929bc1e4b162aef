#include "geopoly/identities.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <utility>

#include "geopoly/bernoulli.hpp"
#include "geopoly/comb.hpp"
#include "geopoly/errors.hpp"
#include "geopoly/geomfamily.hpp"
#include "geopoly/trunc_series.hpp"

namespace geopoly {

std::vector<Rational> IdentityGrid::default_ys() {
  return {Rational(-3), Rational(-2), Rational(-3, 2), Rational(-1, 2),
          Rational(1, 2), Rational(1), Rational(2), Rational(5, 2)};
}

namespace {

const UniPoly& w_poly(unsigned n, long r) { return geom_poly_cached(n, r); }

Rational w(unsigned n, long r, const Rational& y) { return w_poly(n, r)(y); }

Rational sign(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

Rational big(const BigInt& v) { return Rational(v); }

class Args {
 public:
  explicit Args(const ParamMap& map) : map_(map) {}

  const Rational& get(const std::string& name) const {
    auto it = map_.find(name);
    if (it == map_.end()) throw ParameterOutOfDomain("missing parameter " + name);
    return it->second;
  }

  unsigned nonneg(const std::string& name) const {
    const Rational& v = get(name);
    if (!v.is_integer() || v.sign() < 0 || !v.numerator().fits_uint_p()) {
      throw ParameterOutOfDomain(name + " must be a nonnegative integer, got " + v.to_string());
    }
    return static_cast<unsigned>(v.numerator().get_ui());
  }

  long positive(const std::string& name) const {
    const unsigned v = nonneg(name);
    if (v < 1) throw ParameterOutOfDomain(name + " must be a positive integer");
    return static_cast<long>(v);
  }

 private:
  const ParamMap& map_;
};

struct Sides {
  CaseValue lhs;
  CaseValue rhs;
  bool applicable = true;
  std::string note;
};

Sides inapplicable(std::string note) { return {{}, {}, false, std::move(note)}; }

using Evaluator = std::function<Sides(const Args&)>;

struct Entry {
  IdentityInfo info;
  Evaluator eval;
};

// ---- catalog entries -------------------------------------------------------

Sides id14(const Args& a) {
  // lhs: w_n^{(r)}(x; y) recovered as a polynomial by tensor interpolation of
  // n! [t^n] of the generating function on an (n+1)x(n+1) integer grid.
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  std::vector<Rational> nodes;
  for (unsigned i = 0; i <= n; ++i) nodes.emplace_back(static_cast<long>(i));
  const Rational nfact(factorial(n));
  std::vector<std::vector<Rational>> values(n + 1, std::vector<Rational>(n + 1));
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; j <= n; ++j) {
      values[i][j] = egf_reference(static_cast<unsigned>(r), nodes[i], nodes[j], n)[n] * nfact;
    }
  }
  return {interpolate(nodes, nodes, values), geom_two_var(n, r)};
}

Sides id2(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  const Rational& y = a.get("y");
  return {geom_two_var(n, r)(Rational(r), y), sign(n) * w(n, r, -y - 1)};
}

Sides id15(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  const Rational& y = a.get("y");
  Rational lhs;
  for (unsigned k = 0; k <= n; ++k) lhs += big(binomial(n, k)) * w(k, r, y) * Rational(r).pow(n - k);
  return {lhs, sign(n) * w(n, r, -y - 1)};
}

Sides id16(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  const Rational& y = a.get("y");
  if (y.is_zero()) return inapplicable("divisor r*y vanishes at y = 0");
  Rational lhs;
  for (unsigned k = 0; k <= n; ++k) lhs += big(binomial(n, k)) * w(k, r + 1, y);
  return {lhs, w(n + 1, r, y) / (Rational(r) * y)};
}

Sides id11(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r1 = a.positive("r1");
  const long r2 = a.positive("r2");
  const Rational& y = a.get("y");
  if (y == Rational(-1)) return inapplicable("divisor 1 + y vanishes at y = -1");
  Rational lhs;
  for (unsigned k = 0; k <= n; ++k) lhs += big(binomial(n, k)) * w(k, r1, y) * w(n - k, r2, y);
  const long s = r1 + r2 - 1;
  const Rational rhs = (w(n + 1, s, y) + Rational(s) * w(n, s, y)) / (Rational(s) * (Rational(1) + y));
  return {lhs, rhs};
}

Sides id3(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  return {geom_poly(n, r), geom_poly_explicit(n, r)};
}

Sides id4(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  UniPoly lhs = geom_poly(n, r).compose_affine(-1, -1) * sign(n);
  return {std::move(lhs), gamma_moment(rbell_poly(n, static_cast<unsigned>(r)), r)};
}

Sides id8(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  return {geom_poly(n, r), gamma_moment(exp_poly(n), r)};
}

Sides id23(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned m = a.nonneg("m");
  const long r = a.positive("r");
  UniPoly rhs;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned j = 0; j <= m; ++j) {
      const BigInt s2 = stirling2r(m, j);
      if (s2 == 0) continue;
      const Rational weight = big(binomial(n, k)) * big(s2) * pochhammer(Rational(r), j) *
                              big(int_pow(static_cast<long>(j), n - k));
      rhs += UniPoly::monomial(weight, j) * w_poly(k, r + j);
    }
  }
  return {geom_poly(n + m, r), std::move(rhs)};
}

Sides id5(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned m = a.nonneg("m");
  const long r = a.positive("r");
  const auto ur = static_cast<unsigned>(r);
  const UniPoly y_plus_1 = UniPoly::linear(1, 1);
  UniPoly rhs;
  for (unsigned k = 0; k <= m; ++k) {
    const Rational weight = big(stirling2r(m + ur, k + ur, ur)) * pochhammer(Rational(r), k) * sign(m + k);
    rhs += y_plus_1.pow(k) * weight * w_poly(n, r + static_cast<long>(k));
  }
  return {geom_poly(n + m, r), std::move(rhs)};
}

Sides id7_impl(const Args& a, bool as_printed) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  const long r = a.positive("r");
  const Rational& y = a.get("y");
  const auto ur = static_cast<unsigned>(r);
  if (y == Rational(-1)) return inapplicable("divisor (1 + y)^p vanishes at y = -1");
  const Rational prefactor = as_printed ? pochhammer(Rational(static_cast<long>(p)), ur)
                                        : pochhammer(Rational(r), p);
  if (prefactor.is_zero()) return inapplicable("Pochhammer prefactor vanishes");
  Rational sum;
  for (unsigned k = 0; k <= p; ++k) sum += big(stirling1r(p + ur, k + ur, ur)) * w(n + k, r, y);
  const Rational rhs = sum / (prefactor * (Rational(1) + y).pow(p));
  return {w(n, r + static_cast<long>(p), y), rhs};
}

Sides idcor(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned m = a.nonneg("m");
  const long r = a.positive("r");
  const auto ur = static_cast<unsigned>(r);
  const UniPoly y_plus_1 = UniPoly::linear(1, 1);
  UniPoly rhs;
  for (unsigned k = 0; k <= n; ++k) {
    for (unsigned j = 0; j <= m; ++j) {
      const BigInt s2 = stirling2r(m + ur, j + ur, ur);
      if (s2 == 0) continue;
      const Rational weight = big(s2) * big(binomial(n, k)) * big(int_pow(static_cast<long>(j) + r, n - k)) *
                              sign(n + m + j) * pochhammer(Rational(r), j);
      const UniPoly reflected = w_poly(k, r + static_cast<long>(j)).compose_affine(-1, -1);
      rhs += y_plus_1.pow(j) * weight * reflected;
    }
  }
  return {geom_poly(n + m, r), std::move(rhs)};
}

Sides id9(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  UniPoly lhs = UniPoly::linear(1, 1).pow(p) * w_poly(n, static_cast<long>(p) + 1);
  UniPoly rhs;
  for (unsigned k = 0; k <= p; ++k) rhs += w_poly(n + k, 1) * big(stirling1r(p + 1, k + 1));
  rhs *= Rational(1) / big(factorial(p));
  return {std::move(lhs), std::move(rhs)};
}

Rational fubini_sum(unsigned n, long r) {
  // (1/(r! 2^r)) sum_{k=0}^{r} [r+1, k+1] w_{n+k}
  const auto ur = static_cast<unsigned>(r);
  Rational sum;
  for (unsigned k = 0; k <= ur; ++k) sum += big(stirling1r(ur + 1, k + 1)) * geom_number(n + k, 1);
  return sum / (big(factorial(ur)) * Rational(2).pow(r));
}

Sides id29(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  return {geom_number(n, r + 1), fubini_sum(n, r)};
}

Sides id29_printed(const Args& a) {
  const unsigned n = a.nonneg("n");
  const long r = a.positive("r");
  return {geom_number(n, r), fubini_sum(n, r)};
}

Sides id10_sides(unsigned n, unsigned p) {
  const UniPoly weight = UniPoly::linear(-1, 1).pow(p);  // (1 - y)^p
  const UniPoly integrand = weight * w_poly(n, static_cast<long>(p) + 1).compose_affine(-1, 0);
  const Rational rhs = sign(static_cast<long>(n) - 1) * Rational(static_cast<long>(p + 1), static_cast<long>(p + 2)) *
                       pbernoulli_explicit(n - 1, p + 1);
  return {integrate_unit(integrand), rhs};
}

Sides id10(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  if (n == 0) return inapplicable("stated for n >= 1");
  if (n == 1) return inapplicable("outside the confirmed window n >= 2; outcome recorded by ID-10/boundary");
  return id10_sides(n, p);
}

Sides id10_boundary(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  if (n != 1) throw ParameterOutOfDomain("ID-10/boundary probes n = 1 only");
  return id10_sides(n, p);
}

Sides id12_17(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  return {pbernoulli_explicit(n, p), pbernoulli_via_stirling1(n, p)};
}

Sides id18(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned m = a.nonneg("m");
  const unsigned p = a.nonneg("p");
  Rational sum;
  for (unsigned k = 0; k <= m; ++k) {
    sum += big(stirling2r(m + p, k + p, p)) * sign(k) * pochhammer(Rational(static_cast<long>(p) + 1), k) /
           Rational(static_cast<long>(k + p + 1)) * pbernoulli_via_stirling1(n, p + k);
  }
  return {pbernoulli_explicit(n + m, p), Rational(static_cast<long>(p) + 1) * sum};
}

Sides id19_impl(const Args& a, bool as_printed) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  const long r = a.positive("r");
  const auto ur = static_cast<unsigned>(r);
  if (n == 0) return inapplicable("stated for n >= 1");
  const Rational denom_poch = as_printed ? pochhammer(Rational(static_cast<long>(p)), ur + 1)
                                         : pochhammer(Rational(r), p + 1);
  if (denom_poch.is_zero()) return inapplicable("Pochhammer factor in the denominator vanishes");
  const Rational prefactor = Rational(r * (static_cast<long>(p) + r + 1)) / (Rational(r + 1) * denom_poch);
  Rational sum;
  for (unsigned k = 0; k <= p; ++k) {
    sum += big(stirling1r(p + ur, k + ur, ur)) * sign(k) * pbernoulli_via_stirling1(n + k, ur);
  }
  return {pbernoulli_explicit(n, p + ur), prefactor * sum};
}

Sides id24(const Args& a) {
  const unsigned n = a.nonneg("n");
  if (n == 0) return inapplicable("stated for n > 0");
  return {integrate_unit(w_poly(n, 1).compose_affine(-1, 0)), bernoulli(n)};
}

Sides id37(const Args& a) {
  const unsigned n = a.nonneg("n");
  const unsigned p = a.nonneg("p");
  const UniPoly integrand = UniPoly::linear(-1, 1).pow(p) * w_poly(n, 1).compose_affine(-1, 0);
  return {integrate_unit(integrand), pbernoulli_explicit(n, p) / Rational(static_cast<long>(p) + 1)};
}

Sides idtan(const Args& a) {
  const unsigned n = a.nonneg("n");
  if (n == 0) return inapplicable("stated for n >= 1");
  return {w(n, 1, Rational(-1, 2)), tangent_closed_form(n)};
}

IdentityInfo info(std::string id, std::string statement, std::vector<std::string> params, bool poly,
                  bool probe = false, std::string parent = {}) {
  return {std::move(id), std::move(statement), std::move(params), poly, probe, std::move(parent)};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    t.push_back({info("ID-14", "w_n^(r)(x;y) = sum_k C(n,k) w_k^(r)(y) x^(n-k), against the generating function",
                      {"n", "r"}, true),
                 id14});
    t.push_back({info("ID-2", "w_n^(r)(r;y) = (-1)^n w_n^(r)(-y-1)", {"n", "r", "y"}, false), id2});
    t.push_back({info("ID-15", "sum_k C(n,k) w_k^(r)(y) r^(n-k) = (-1)^n w_n^(r)(-y-1)", {"n", "r", "y"}, false), id15});
    t.push_back({info("ID-16", "sum_k C(n,k) w_k^(r+1)(y) = w_(n+1)^(r)(y) / (r y)", {"n", "r", "y"}, false), id16});
    t.push_back({info("ID-11", "convolution of w^(r1) and w^(r2)", {"n", "r1", "r2", "y"}, false), id11});
    t.push_back({info("ID-3", "explicit r-Stirling expansion of w_n^(r)(y)", {"n", "r"}, true), id3});
    t.push_back({info("ID-4", "(-1)^n w_n^(r)(-y-1) = gamma moment of the r-Bell polynomial", {"n", "r"}, true), id4});
    t.push_back({info("ID-8", "w_n^(r)(y) = gamma moment of the exponential polynomial", {"n", "r"}, true), id8});
    t.push_back({info("ID-23", "w_(n+m)^(r) in the family y^j w_n^(r+j)", {"n", "m", "r"}, true), id23});
    t.push_back({info("ID-5", "w_(n+m)^(r) via r-Stirling numbers of the second kind", {"n", "m", "r"}, true), id5});
    t.push_back({info("ID-7", "(r)_p (1+y)^p w_n^(r+p)(y) = sum_k [p+r,k+r]_r w_(n+k)^(r)(y)", {"n", "p", "r", "y"},
                      false),
                 [](const Args& a) { return id7_impl(a, false); }});
    t.push_back({info("ID-7/printed", "ID-7 with the prefactor (p)_r", {"n", "p", "r", "y"}, false, true, "ID-7"),
                 [](const Args& a) { return id7_impl(a, true); }});
    t.push_back({info("ID-COR", "double-sum representation of w_(n+m)^(r)", {"n", "m", "r"}, true), idcor});
    t.push_back({info("ID-9", "(1+y)^p w_n^(p+1)(y) = (1/p!) sum_k [p+1,k+1] w_(n+k)(y)", {"n", "p"}, true), id9});
    t.push_back({info("ID-29", "w_n^(r+1) = (1/(r! 2^r)) sum_k [r+1,k+1] w_(n+k)", {"n", "r"}, false), id29});
    t.push_back({info("ID-29/printed", "ID-29 with left side w_n^(r)", {"n", "r"}, false, true, "ID-29"),
                 id29_printed});
    t.push_back({info("ID-10", "int_0^1 (1-y)^p w_n^(p+1)(-y) dy = (-1)^(n-1) (p+1)/(p+2) B_(n-1,p+1), n >= 2",
                      {"n", "p"}, false),
                 id10});
    t.push_back({info("ID-10/boundary", "ID-10 at n = 1", {"n", "p"}, false, true, "ID-10"), id10_boundary});
    t.push_back({info("ID-12/17", "explicit and Stirling-first-kind routes to B_(n,p)", {"n", "p"}, false), id12_17});
    t.push_back({info("ID-18", "B_(n+m,p) in terms of B_(n,p+k)", {"n", "m", "p"}, false), id18});
    t.push_back({info("ID-19", "B_(n,p+r) = r(p+r+1)/((r+1)(r)_(p+1)) sum_k [p+r,k+r]_r (-1)^k B_(n+k,r)",
                      {"n", "p", "r"}, false),
                 [](const Args& a) { return id19_impl(a, false); }});
    t.push_back({info("ID-19/printed", "ID-19 with the factor (p)_(r+1)", {"n", "p", "r"}, false, true, "ID-19"),
                 [](const Args& a) { return id19_impl(a, true); }});
    t.push_back({info("ID-24", "int_0^1 w_n(-y) dy = B_n", {"n"}, false), id24});
    t.push_back({info("ID-37", "int_0^1 (1-y)^p w_n(-y) dy = B_(n,p)/(p+1)", {"n", "p"}, false), id37});
    t.push_back({info("ID-TAN", "w_n(-1/2) = (2/(n+1)) (1 - 2^(n+1)) B_(n+1)", {"n"}, false), idtan});
    return t;
  }();
  return table;
}

const Entry& find_entry(const std::string& id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return e;
  }
  throw UnknownIdentity(id);
}

std::vector<Rational> range_values(const std::string& name, const std::string& id, const IdentityGrid& g) {
  std::vector<Rational> out;
  auto ints = [&out](long lo, long hi) {
    for (long v = lo; v <= hi; ++v) out.emplace_back(v);
  };
  if (name == "n") {
    if (id == "ID-10/boundary") {
      if (g.n_max >= 1) ints(1, 1);
    } else {
      ints(0, g.n_max);
    }
  } else if (name == "m") {
    ints(0, g.m_max);
  } else if (name == "r" || name == "r1" || name == "r2") {
    ints(std::max(1L, g.r_min), g.r_max);
  } else if (name == "p") {
    ints(0, g.p_max);
  } else if (name == "y") {
    out = g.ys;
  }
  return out;
}

void enumerate(const Entry& e, const IdentityGrid& grid, std::vector<ParamMap>& out) {
  std::vector<std::vector<Rational>> axes;
  for (const auto& name : e.info.params) axes.push_back(range_values(name, e.info.id, grid));
  for (const auto& axis : axes) {
    if (axis.empty()) return;
  }
  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    ParamMap m;
    for (std::size_t i = 0; i < axes.size(); ++i) m[e.info.params[i]] = axes[i][idx[i]];
    out.push_back(std::move(m));
    std::size_t d = axes.size();
    while (d > 0) {
      --d;
      if (++idx[d] < axes[d].size()) break;
      idx[d] = 0;
      if (d == 0) return;
    }
    if (axes.empty()) return;
  }
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> identity_ids() {
  std::vector<std::string> ids;
  for (const auto& e : entries()) {
    if (!e.info.probe) ids.push_back(e.info.id);
  }
  return ids;
}

CheckCase verify_identity(const std::string& id, const ParamMap& params) {
  const Entry& e = find_entry(id);
  CheckCase c;
  c.id = id;
  c.probe = e.info.probe;
  for (const auto& name : e.info.params) {
    auto it = params.find(name);
    if (it == params.end()) throw ParameterOutOfDomain(id + ": missing parameter " + name);
    c.params.push_back({name, it->second});
  }
  Sides sides = e.eval(Args(params));
  c.note = std::move(sides.note);
  if (!sides.applicable) {
    c.verdict = Verdict::inapplicable;
    return c;
  }
  c.lhs = std::move(sides.lhs);
  c.rhs = std::move(sides.rhs);
  c.verdict = compare_values(c.lhs, c.rhs);
  return c;
}

CheckReport run_suite(const std::vector<std::string>& ids, const IdentityGrid& grid, unsigned threads) {
  // Expand requested ids with their probes, keeping catalog order.
  std::vector<const Entry*> selected;
  for (const auto& id : ids) find_entry(id);
  for (const auto& e : entries()) {
    const std::string& key = e.info.probe ? e.info.parent : e.info.id;
    if (std::find(ids.begin(), ids.end(), key) != ids.end() ||
        std::find(ids.begin(), ids.end(), e.info.id) != ids.end()) {
      selected.push_back(&e);
    }
  }

  std::vector<std::pair<const Entry*, ParamMap>> work;
  for (const Entry* e : selected) {
    std::vector<ParamMap> maps;
    enumerate(*e, grid, maps);
    for (auto& m : maps) work.emplace_back(e, std::move(m));
  }

  std::vector<CheckCase> results(work.size());
  const unsigned workers = std::max(1U, threads);
  auto run_range = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < work.size(); i += stride) {
      results[i] = verify_identity(work[i].first->info.id, work[i].second);
    }
  };
  if (workers == 1) {
    run_range(0, 1);
  } else {
    std::vector<std::future<void>> futures;
    for (unsigned w = 0; w < workers; ++w) futures.push_back(std::async(std::launch::async, run_range, w, workers));
    for (auto& f : futures) f.get();
  }

  CheckReport report("identities");
  for (auto& c : results) report.add(std::move(c));
  report.sort();
  return report;
}

}  // namespace geopoly

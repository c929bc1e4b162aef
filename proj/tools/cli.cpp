#include "cli.hpp"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "geopoly/bernoulli.hpp"
#include "geopoly/comb.hpp"
#include "geopoly/congruences.hpp"
#include "geopoly/errors.hpp"
#include "geopoly/geomfamily.hpp"
#include "geopoly/identities.hpp"
#include "geopoly/residue.hpp"
#include "geopoly/series.hpp"

namespace geopoly {

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

class UsageError : public DomainError {
 public:
  using DomainError::DomainError;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string join(const std::vector<std::string>& args) {
  std::string s = "geopoly";
  for (const auto& a : args) s += " " + a;
  return s;
}

// RFC 4180 field quoting.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << "\r\n";
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string());
    f << contents;
    f.flush();
    if (!f) throw Error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

Rational parse_rational(const std::string& text, const char* flag) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid rational for ") + flag + ": " + text);
  }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item, "--y-values"));
  }
  if (out.empty()) throw UsageError("--y-values is empty");
  return out;
}

PrimeRange parse_primes(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError("--primes expects a..b");
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  try {
    std::size_t used = 0;
    lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw UsageError("bad lower bound");
    const std::string upper = text.substr(dots + 2);
    hi = std::stoull(upper, &used);
    if (used != upper.size()) throw UsageError("bad upper bound");
  } catch (const std::logic_error&) {
    throw UsageError("--primes expects a..b with integer bounds");
  }
  if (lo > hi) throw UsageError("--primes lower bound exceeds upper bound");
  if (!is_prime(lo)) throw NotPrime(std::to_string(lo));
  if (!is_prime(hi)) throw NotPrime(std::to_string(hi));
  return {lo, hi};
}

struct ComputeOptions {
  std::string family;
  long n = 0;
  long k = 0;
  long r = -1;  // family default when unset
  long p = 0;
  std::optional<std::string> x;
  std::optional<std::string> y;
  bool table = false;
  long n_max = 10;
  bool json = false;
};

unsigned as_index(long v, const char* flag) {
  if (v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
  return static_cast<unsigned>(v);
}

// One value (or polynomial) of the family at index n, as rendered text plus
// JSON. `k` is used only by the Stirling families.
struct Computed {
  std::string text;
  json value;
};

Computed compute_one(const ComputeOptions& o, unsigned n) {
  const auto& f = o.family;
  auto order = [&](long fallback) { return o.r < 0 ? fallback : o.r; };
  auto poly_result = [&](const UniPoly& poly) -> Computed {
    if (o.y) {
      const Rational v = poly(parse_rational(*o.y, "--y"));
      return {v.to_string(), v.to_string()};
    }
    return {poly.to_string("y"), to_json(CaseValue(poly))};
  };
  if (f == "stirling2r" || f == "stirling1r") {
    const unsigned k = as_index(o.k, "--k");
    const unsigned r = as_index(order(0), "--r");
    const BigInt v = f == "stirling2r" ? stirling2r(n, k, r) : stirling1r(n, k, r);
    return {to_string(v), to_string(v)};
  }
  if (f == "geom") return poly_result(geom_poly(n, order(1)));
  if (f == "geom-higher") return poly_result(geom_poly(n, order(1)));
  if (f == "exp") return poly_result(exp_poly(n));
  if (f == "rbell") return poly_result(rbell_poly(n, as_index(order(0), "--r")));
  if (f == "geom-two-var") {
    const BiPoly poly = geom_two_var(n, order(1));
    if (o.x && o.y) {
      const Rational v = poly(parse_rational(*o.x, "--x"), parse_rational(*o.y, "--y"));
      return {v.to_string(), v.to_string()};
    }
    if (o.x || o.y) throw UsageError("geom-two-var needs both --x and --y, or neither");
    return {poly.to_string(), to_json(CaseValue(poly))};
  }
  if (f == "bernoulli") {
    const Rational v = bernoulli(n);
    return {v.to_string(), v.to_string()};
  }
  if (f == "pbernoulli") {
    const Rational v = pbernoulli(n, as_index(o.p, "--p")).value;
    return {v.to_string(), v.to_string()};
  }
  throw UsageError("unknown family: " + f);
}

int cmd_compute(const ComputeOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  const bool stirling = o.family == "stirling1r" || o.family == "stirling2r";
  if (!o.table) {
    const Computed c = compute_one(o, as_index(o.n, "--n"));
    if (o.json) {
      json doc{{"family", o.family}, {"n", o.n}, {"value", c.value}, {"command_line", join(args)}};
      out << doc.dump(2) << "\n";
    } else {
      out << c.text << "\n";
    }
    return kExitOk;
  }
  const unsigned n_max = as_index(o.n_max, "--n-max");
  json rows = json::array();
  if (!o.json) csv_row(out, stirling ? std::vector<std::string>{"n", "k", "value"} : std::vector<std::string>{"n", "value"});
  for (unsigned n = 0; n <= n_max; ++n) {
    if (stirling) {
      ComputeOptions row = o;
      for (long k = 0; k <= static_cast<long>(n); ++k) {
        row.k = k;
        const Computed c = compute_one(row, n);
        if (o.json) {
          rows.push_back({{"n", n}, {"k", k}, {"value", c.value}});
        } else {
          csv_row(out, {std::to_string(n), std::to_string(k), c.text});
        }
      }
    } else {
      const Computed c = compute_one(o, n);
      if (o.json) {
        rows.push_back({{"n", n}, {"value", c.value}});
      } else {
        csv_row(out, {std::to_string(n), c.text});
      }
    }
  }
  if (o.json) out << json{{"family", o.family}, {"rows", rows}}.dump(2) << "\n";
  return kExitOk;
}

json manifest(const std::vector<std::string>& args, json grid, const Totals& totals, int exit_status) {
  return {{"command_line", join(args)}, {"catalog_version", kCatalogVersion},
          {"grid", std::move(grid)},    {"timestamp", utc_timestamp()},
          {"totals", to_json(totals)},  {"exit_status", exit_status}};
}

int emit_report(const CheckReport& report, json grid, const std::vector<std::string>& args,
                const std::optional<std::string>& out_path, std::ostream& out) {
  const Totals totals = report.totals();
  const int status = report.ok() ? kExitOk : kExitFail;
  json body = to_json(report);
  json doc;
  doc["manifest"] = manifest(args, std::move(grid), totals, status);
  doc["cases"] = std::move(body["cases"]);
  doc["totals"] = std::move(body["totals"]);
  const std::string text = doc.dump(2) + "\n";
  if (out_path) {
    write_atomically(*out_path, text);
  } else {
    out << text;
  }
  return status;
}

struct VerifyOptions {
  std::vector<std::string> ids;
  bool all = false;
  bool default_grid = false;
  std::optional<long> n_max;
  std::optional<long> m_max;
  std::optional<long> r_max;
  std::optional<long> p_max;
  std::optional<std::string> y_values;
  unsigned jobs = 0;
  std::optional<std::string> out;
};

int cmd_verify(const VerifyOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> ids = o.all ? identity_ids() : o.ids;
  if (ids.empty()) throw UsageError("verify needs --identity or --all");
  const auto known = identity_ids();
  for (const auto& id : ids) {
    if (std::find(known.begin(), known.end(), id) == known.end()) throw UnknownIdentity(id);
  }
  IdentityGrid grid;
  if (o.n_max) grid.n_max = as_index(*o.n_max, "--n-max");
  if (o.m_max) grid.m_max = as_index(*o.m_max, "--m-max");
  if (o.r_max) grid.r_max = *o.r_max;
  if (o.p_max) grid.p_max = as_index(*o.p_max, "--p-max");
  if (o.y_values) grid.ys = parse_rational_list(*o.y_values);
  if (grid.r_max < grid.r_min) throw UsageError("--r-max must be >= 1");
  const unsigned jobs = o.jobs ? o.jobs : std::max(1u, std::thread::hardware_concurrency());

  json ys = json::array();
  for (const auto& y : grid.ys) ys.push_back(y.to_string());
  json grid_json{{"identities", ids}, {"n_max", grid.n_max}, {"m_max", grid.m_max}, {"r_min", grid.r_min},
                 {"r_max", grid.r_max}, {"p_max", grid.p_max}, {"y_values", ys}};
  return emit_report(run_suite(ids, grid, jobs), std::move(grid_json), args, o.out, out);
}

struct CongruenceOptions {
  std::vector<std::string> checks;
  bool all = false;
  std::optional<std::string> primes;
  unsigned y_sample = 0;
  std::optional<std::string> out;
};

int cmd_congruence(const CongruenceOptions& o, const std::vector<std::string>& args, std::ostream& out) {
  std::vector<std::string> ids = o.all ? congruence_ids() : o.checks;
  if (ids.empty()) throw UsageError("congruence needs --check or --all");
  for (const auto& id : ids) congruence_info(id);
  std::optional<PrimeRange> range;
  if (o.primes) range = parse_primes(*o.primes);
  CheckReport report("congruences");
  for (const auto& id : ids) report.merge(sweep(id, range, YSampling{o.y_sample}));
  report.sort();
  json grid{{"checks", ids}, {"y_sample", o.y_sample}};
  grid["primes"] = o.primes ? json(*o.primes) : json("default");
  return emit_report(report, std::move(grid), args, o.out, out);
}

struct SeriesOptions {
  std::string op;
  long n = 0;
  long r = -1;
  std::optional<std::string> y;
  std::optional<std::string> x;
  std::string tol = "1e-30";
  bool json = false;
};

int cmd_series(const SeriesOptions& o, std::ostream& out) {
  const Rational tol = parse_rational(o.tol, "--tol");
  const unsigned n = as_index(o.n, "--n");
  json doc{{"op", o.op}, {"n", n}, {"tol", tol.to_string()}};
  auto put_value = [&](const CertifiedValue& v) {
    doc["partial_sum"] = v.partial_sum.to_string();
    doc["tail_radius"] = v.tail_radius.to_string();
    doc["terms_used"] = v.terms_used;
  };
  auto arg = [&](const std::optional<std::string>& a, const char* flag, const char* fallback) {
    return parse_rational(a.value_or(fallback), flag);
  };
  bool pass = true;
  if (o.op == "dobinski" || o.op == "power-binomial") {
    const long r = o.r < 0 ? 1 : o.r;
    const bool dob = o.op == "dobinski";
    const Rational z = dob ? arg(o.y ? o.y : o.x, "--y", "1/2") : arg(o.x ? o.x : o.y, "--x", "1/2");
    const CertifiedValue v = dob ? sum_dobinski_geometric(n, r, z, tol) : sum_power_binomial(n, r, z, tol);
    const Rational closed = dob ? dobinski_closed_form(n, r, z) : power_binomial_closed_form(n, r, z);
    pass = v.contains(closed);
    doc["r"] = r;
    doc[dob ? "y" : "x"] = z.to_string();
    put_value(v);
    doc["closed_form"] = closed.to_string();
  } else if (o.op == "exp") {
    const Rational y = arg(o.y, "--y", "1");
    const CertifiedValue v = exp_certified(y, tol);
    doc["y"] = y.to_string();
    put_value(v);
  } else if (o.op == "rbell") {
    const unsigned r = as_index(o.r < 0 ? 0 : o.r, "--r");
    const Rational y = arg(o.y, "--y", "1");
    const RbellDobinskiResult res = check_rbell_dobinski(n, r, y, tol);
    pass = res.pass;
    doc["r"] = r;
    doc["y"] = y.to_string();
    put_value(res.series_value);
    doc["rbell_value"] = res.phi.to_string();
    doc["exp_partial_sum"] = res.exp_value.partial_sum.to_string();
    doc["exp_tail_radius"] = res.exp_value.tail_radius.to_string();
  } else {
    throw UsageError("unknown series op: " + o.op);
  }
  if (doc.contains("closed_form") || o.op == "rbell") doc["containment"] = pass ? "pass" : "fail";
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    for (const char* key : {"partial_sum", "tail_radius", "terms_used", "closed_form", "rbell_value", "containment"}) {
      if (!doc.contains(key)) continue;
      const json& v = doc[key];
      out << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
  return pass ? kExitOk : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact geometric polynomial toolkit", "geopoly"};
  app.require_subcommand(1);

  ComputeOptions co;
  auto* compute = app.add_subcommand("compute", "Compute numbers and polynomials");
  compute->add_option("family", co.family, "Family name")
      ->required()
      ->check(CLI::IsMember({"stirling1r", "stirling2r", "geom", "geom-higher", "geom-two-var", "exp", "rbell",
                             "bernoulli", "pbernoulli"}));
  compute->add_option("--n", co.n, "Index n");
  compute->add_option("--k", co.k, "Index k (Stirling families)");
  compute->add_option("--r", co.r, "Order r");
  compute->add_option("--p", co.p, "Parameter p (pbernoulli)");
  compute->add_option("--x", co.x, "Evaluation point x");
  compute->add_option("--y", co.y, "Evaluation point y");
  compute->add_flag("--table", co.table, "Print rows n = 0..n-max as CSV");
  compute->add_option("--n-max", co.n_max, "Last row of --table");
  compute->add_flag("--json", co.json, "JSON output");

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "Verify catalog identities on a grid");
  verify->add_option("--identity", vo.ids, "Identity id (repeatable)");
  verify->add_flag("--all", vo.all, "Every catalog identity");
  verify->add_flag("--default-grid", vo.default_grid, "Use the default grid (also the default)");
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--m-max", vo.m_max);
  verify->add_option("--r-max", vo.r_max);
  verify->add_option("--p-max", vo.p_max);
  verify->add_option("--y-values", vo.y_values, "Comma separated rationals");
  verify->add_option("--jobs", vo.jobs, "Worker threads (0 = hardware)");
  verify->add_option("--out", vo.out, "Write the report to this file");

  CongruenceOptions go;
  auto* congruence = app.add_subcommand("congruence", "Sweep prime congruences");
  congruence->add_option("--check", go.checks, "Check id (repeatable)");
  congruence->add_flag("--all", go.all, "Every check");
  congruence->add_option("--primes", go.primes, "Prime range a..b with prime endpoints");
  congruence->add_option("--y-sample", go.y_sample, "Number of y values per prime (0 = all)");
  congruence->add_option("--out", go.out, "Write the report to this file");

  SeriesOptions so;
  auto* series = app.add_subcommand("series", "Certified series evaluation");
  series->add_option("--op", so.op)->required()->check(CLI::IsMember({"dobinski", "power-binomial", "exp", "rbell"}));
  series->add_option("--n", so.n);
  series->add_option("--r", so.r);
  series->add_option("--y", so.y);
  series->add_option("--x", so.x);
  series->add_option("--tol", so.tol);
  series->add_flag("--json", so.json);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(co, args, out);
    if (verify->parsed()) return cmd_verify(vo, args, out);
    if (congruence->parsed()) return cmd_congruence(go, args, out);
    if (series->parsed()) return cmd_series(so, out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const TolNotReached& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace geopoly

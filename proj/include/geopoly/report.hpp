#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "geopoly/poly.hpp"
#include "geopoly/rational.hpp"

namespace geopoly {

enum class Verdict { pass, fail, inapplicable, denominator_divisible };

std::string_view to_string(Verdict v);

struct Param {
  std::string name;
  Rational value;

  friend bool operator==(const Param&, const Param&) = default;
};

/// Residue set expected by a congruence check, as values in [0, q).
struct ResidueSet {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> values;

  bool contains(std::uint64_t v) const;
  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
};

using CaseValue = std::variant<std::monostate, Rational, UniPoly, BiPoly, ResidueSet>;

/// One evaluated case of an identity or congruence. Probe cases document the
/// outcome of a statement outside its confirmed validity window (or as printed
/// before correction); they are reported but never count as failures.
struct CheckCase {
  std::string id;
  std::vector<Param> params;
  CaseValue lhs;
  CaseValue rhs;
  Verdict verdict = Verdict::inapplicable;
  bool probe = false;
  std::string note;
};

using IdentityCase = CheckCase;
using CongruenceCase = CheckCase;

struct Totals {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inapplicable = 0;
  std::size_t denominator_divisible = 0;
  std::size_t probe_total = 0;
  std::size_t probe_pass = 0;
  std::size_t probe_fail = 0;
};

class CheckReport {
 public:
  explicit CheckReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckCase>& cases() const { return cases_; }

  void add(CheckCase c) { cases_.push_back(std::move(c)); }
  void merge(CheckReport other);

  /// Orders cases by (id, parameter values, probe flag).
  void sort();

  Totals totals() const;

  /// No failures and no denominator-divisible cases among the counted cases.
  bool ok() const;

  std::vector<const CheckCase*> failures() const;

 private:
  std::string suite_;
  std::vector<CheckCase> cases_;
};

nlohmann::json to_json(const CaseValue& v);
nlohmann::json to_json(const CheckCase& c);
nlohmann::json to_json(const Totals& t);

/// {"cases": [...], "totals": {...}}; the CLI adds the manifest.
nlohmann::json to_json(const CheckReport& report);

/// Sets verdict from exact equality of lhs and rhs.
Verdict compare_values(const CaseValue& lhs, const CaseValue& rhs);

}  // namespace geopoly

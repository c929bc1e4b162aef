#include "geopoly/report.hpp"

#include <algorithm>

namespace geopoly {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inapplicable:
      return "inapplicable";
    case Verdict::denominator_divisible:
      return "denominator_divisible";
  }
  return "unknown";
}

bool ResidueSet::contains(std::uint64_t v) const {
  return std::find(values.begin(), values.end(), v) != values.end();
}

void CheckReport::merge(CheckReport other) {
  cases_.insert(cases_.end(), std::make_move_iterator(other.cases_.begin()),
                std::make_move_iterator(other.cases_.end()));
}

void CheckReport::sort() {
  std::stable_sort(cases_.begin(), cases_.end(), [](const CheckCase& a, const CheckCase& b) {
    if (a.id != b.id) return a.id < b.id;
    const std::size_t common = std::min(a.params.size(), b.params.size());
    for (std::size_t i = 0; i < common; ++i) {
      if (a.params[i].name != b.params[i].name) return a.params[i].name < b.params[i].name;
      if (a.params[i].value != b.params[i].value) return a.params[i].value < b.params[i].value;
    }
    if (a.params.size() != b.params.size()) return a.params.size() < b.params.size();
    return a.probe < b.probe;
  });
}

Totals CheckReport::totals() const {
  Totals t;
  for (const auto& c : cases_) {
    if (c.probe) {
      ++t.probe_total;
      if (c.verdict == Verdict::pass) ++t.probe_pass;
      if (c.verdict == Verdict::fail) ++t.probe_fail;
      continue;
    }
    ++t.total;
    switch (c.verdict) {
      case Verdict::pass:
        ++t.pass;
        break;
      case Verdict::fail:
        ++t.fail;
        break;
      case Verdict::inapplicable:
        ++t.inapplicable;
        break;
      case Verdict::denominator_divisible:
        ++t.denominator_divisible;
        break;
    }
  }
  return t;
}

bool CheckReport::ok() const {
  const Totals t = totals();
  return t.fail == 0 && t.denominator_divisible == 0;
}

std::vector<const CheckCase*> CheckReport::failures() const {
  std::vector<const CheckCase*> out;
  for (const auto& c : cases_) {
    if (!c.probe && (c.verdict == Verdict::fail || c.verdict == Verdict::denominator_divisible)) {
      out.push_back(&c);
    }
  }
  return out;
}

nlohmann::json to_json(const CaseValue& v) {
  struct Visitor {
    nlohmann::json operator()(std::monostate) const { return nullptr; }
    nlohmann::json operator()(const Rational& r) const { return r.to_string(); }
    nlohmann::json operator()(const UniPoly& p) const {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& c : p.coefficients()) coeffs.push_back(c.to_string());
      return coeffs;
    }
    nlohmann::json operator()(const BiPoly& p) const {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : p.grid()) {
        nlohmann::json cells = nlohmann::json::array();
        for (const auto& c : row) cells.push_back(c.to_string());
        rows.push_back(std::move(cells));
      }
      return rows;
    }
    nlohmann::json operator()(const ResidueSet& s) const {
      return {{"modulus", s.modulus}, {"residues", s.values}};
    }
  };
  return std::visit(Visitor{}, v);
}

nlohmann::json to_json(const CheckCase& c) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& p : c.params) params[p.name] = p.value.to_string();
  nlohmann::json out = {
      {"id", c.id}, {"params", params}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)},
      {"verdict", std::string(to_string(c.verdict))},
  };
  if (c.probe) out["probe"] = true;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

nlohmann::json to_json(const Totals& t) {
  return {
      {"total", t.total},
      {"pass", t.pass},
      {"fail", t.fail},
      {"inapplicable", t.inapplicable},
      {"denominator_divisible", t.denominator_divisible},
      {"probe_total", t.probe_total},
      {"probe_pass", t.probe_pass},
      {"probe_fail", t.probe_fail},
  };
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json cases = nlohmann::json::array();
  nlohmann::json divisible = nlohmann::json::array();
  for (const auto& c : report.cases()) {
    cases.push_back(to_json(c));
    if (c.verdict == Verdict::denominator_divisible) divisible.push_back(to_json(c));
  }
  nlohmann::json totals = to_json(report.totals());
  totals["denominator_divisible_cases"] = std::move(divisible);
  return {{"cases", std::move(cases)}, {"totals", std::move(totals)}};
}

Verdict compare_values(const CaseValue& lhs, const CaseValue& rhs) {
  return lhs == rhs ? Verdict::pass : Verdict::fail;
}

}  // namespace geopoly

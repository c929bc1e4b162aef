#pragma once

#include <map>
#include <string>
#include <vector>

#include "geopoly/report.hpp"

namespace geopoly {

/// Parameter ranges swept by run_suite. Every range is inclusive.
struct IdentityGrid {
  unsigned n_max = 8;
  unsigned m_max = 8;
  long r_min = 1;
  long r_max = 4;
  unsigned p_max = 5;
  std::vector<Rational> ys = default_ys();

  static std::vector<Rational> default_ys();
};

struct IdentityInfo {
  std::string id;
  std::string statement;
  std::vector<std::string> params;  // enumeration order
  bool polynomial_level = false;
  /// Non-counting companion recording a statement outside its confirmed
  /// window or as printed before correction.
  bool probe = false;
  std::string parent;  // catalog id a probe belongs to
};

inline constexpr const char* kCatalogVersion = "1";

const std::vector<IdentityInfo>& identity_catalog();

/// Ids of all counting (non-probe) entries, in catalog order.
std::vector<std::string> identity_ids();

using ParamMap = std::map<std::string, Rational>;

/// Evaluates both sides of one catalog entry by their own formulas and compares
/// exactly. Throws UnknownIdentity or ParameterOutOfDomain.
CheckCase verify_identity(const std::string& id, const ParamMap& params);

/// Cartesian sweep of the requested ids (plus their probes) over the grid.
/// Cases are evaluated on up to `threads` workers and merged deterministically.
CheckReport run_suite(const std::vector<std::string>& ids, const IdentityGrid& grid = {}, unsigned threads = 1);

}  // namespace geopoly

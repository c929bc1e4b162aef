#include "geopoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "geopoly/comb.hpp"
#include "geopoly/errors.hpp"

namespace geopoly {

UniPoly::UniPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back().is_zero()) coefficients_.pop_back();
}

Rational UniPoly::coefficient(std::size_t k) const {
  return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Rational UniPoly::operator()(const Rational& y) const {
  Rational acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= y;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in the polynomial ring.
  const UniPoly inner = linear(a, b);
  UniPoly acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] += o.coefficients_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coefficients_.size() > coefficients_.size()) coefficients_.resize(o.coefficients_.size());
  for (std::size_t k = 0; k < o.coefficients_.size(); ++k) coefficients_[k] -= o.coefficients_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& coeff : coefficients_) coeff *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1);
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    if (a.coefficients_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) {
      out[i + j] += a.coefficients_[i] * b.coefficients_[j];
    }
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coefficients_.size(); ++k) {
    const Rational& c = coefficients_[k];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      out << mag.to_string();
      continue;
    }
    if (mag != Rational(1)) out << mag.to_string() << "*";
    out << var;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

BiPoly::BiPoly(std::vector<std::vector<Rational>> grid) : grid_(std::move(grid)) { trim(); }

void BiPoly::trim() {
  std::size_t width = 0;
  for (const auto& row : grid_) {
    for (std::size_t j = row.size(); j > 0; --j) {
      if (!row[j - 1].is_zero()) {
        width = std::max(width, j);
        break;
      }
    }
  }
  if (width == 0) {
    grid_.clear();
    return;
  }
  for (auto& row : grid_) row.resize(width);
  while (!grid_.empty() &&
         std::all_of(grid_.back().begin(), grid_.back().end(), [](const Rational& c) { return c.is_zero(); })) {
    grid_.pop_back();
  }
}

Rational BiPoly::coefficient(std::size_t i, std::size_t j) const {
  if (i >= grid_.size() || j >= grid_[i].size()) return 0;
  return grid_[i][j];
}

UniPoly BiPoly::x_slice(std::size_t i) const {
  if (i >= grid_.size()) return {};
  return UniPoly(grid_[i]);
}

Rational BiPoly::operator()(const Rational& x, const Rational& y) const {
  Rational acc;
  for (auto it = grid_.rbegin(); it != grid_.rend(); ++it) {
    acc *= x;
    acc += UniPoly(*it)(y);
  }
  return acc;
}

std::string BiPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    for (std::size_t j = 0; j < grid_[i].size(); ++j) {
      const Rational& c = grid_[i][j];
      if (c.is_zero()) continue;
      const Rational mag = c.abs();
      if (first) {
        if (c.sign() < 0) out << "-";
      } else {
        out << (c.sign() < 0 ? " - " : " + ");
      }
      first = false;
      std::string mono;
      if (i > 0) mono += i > 1 ? "x^" + std::to_string(i) : "x";
      if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j > 1 ? "y^" + std::to_string(j) : "y");
      if (mono.empty()) {
        out << mag.to_string();
      } else {
        if (mag != Rational(1)) out << mag.to_string() << "*";
        out << mono;
      }
    }
  }
  return out.str();
}

Rational poly_eval(const UniPoly& p, const Rational& y) { return p(y); }

Rational poly_eval(const BiPoly& p, const Rational& x, const Rational& y) { return p(x, y); }

Rational integrate_unit(const UniPoly& p) {
  Rational sum;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) sum += c[k] / Rational(static_cast<long>(k + 1));
  return sum;
}

UniPoly antiderivative(const UniPoly& p) {
  const auto& c = p.coefficients();
  std::vector<Rational> out(c.size() + 1);
  for (std::size_t k = 0; k < c.size(); ++k) out[k + 1] = c[k] / Rational(static_cast<long>(k + 1));
  return UniPoly(std::move(out));
}

UniPoly gamma_moment(const UniPoly& p, long r) {
  if (r < 1) throw InvalidOrder("gamma moment needs r >= 1, got " + std::to_string(r));
  std::vector<Rational> out = p.coefficients();
  Rational weight(1);  // (r)_k
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] *= weight;
    weight *= Rational(r + static_cast<long>(k));
  }
  return UniPoly(std::move(out));
}

UniPoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = nodes.size();
  // Newton divided differences.
  std::vector<Rational> dd(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational gap = nodes[i] - nodes[i - level];
      if (gap.is_zero()) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / gap;
    }
  }
  UniPoly result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly::linear(1, -nodes[i]);
    result += UniPoly::constant(dd[i]);
  }
  return result;
}

BiPoly interpolate(std::span<const Rational> xs, std::span<const Rational> ys,
                   const std::vector<std::vector<Rational>>& values) {
  if (values.size() != xs.size()) throw std::invalid_argument("interpolate: size mismatch");
  // Interpolate in y for each x node, then each y-coefficient across x.
  std::vector<UniPoly> in_y;
  in_y.reserve(xs.size());
  for (const auto& row : values) in_y.push_back(interpolate(ys, row));

  std::vector<std::vector<Rational>> grid(xs.size(), std::vector<Rational>(ys.size()));
  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<Rational> column;
    column.reserve(xs.size());
    for (const auto& p : in_y) column.push_back(p.coefficient(j));
    const UniPoly in_x = interpolate(xs, column);
    for (std::size_t i = 0; i < xs.size(); ++i) grid[i][j] = in_x.coefficient(i);
  }
  return BiPoly(std::move(grid));
}

}  // namespace geopoly

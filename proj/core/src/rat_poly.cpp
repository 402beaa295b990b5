#include "hypercheck/rat_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypercheck {

RatPoly::RatPoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

RatPoly RatPoly::monomial(const Rational& scale, long power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<Rational> coeffs(static_cast<std::size_t>(power) + 1);
  coeffs.back() = scale;
  return RatPoly(std::move(coeffs));
}

Rational RatPoly::coefficient(long k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RatPoly::eval(const Rational& t) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

std::string RatPoly::str(const std::string& variable) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = c.abs();
    if (k == 0) {
      out << magnitude;
      continue;
    }
    if (magnitude != Rational(1)) out << magnitude << "*";
    out << variable;
    if (k > 1) out << "^" << k;
  }
  return out.str();
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return RatPoly{};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatPoly(std::move(out));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational cauchy_root_bound(const RatPoly& p) {
  if (p.degree() < 1) throw std::invalid_argument("root bound of a constant polynomial");
  const auto& c = p.coefficients();
  const Rational lead = c.back().abs();
  Rational largest;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) largest = std::max(largest, c[k].abs() / lead);
  return Rational(1) + largest;
}

}  // namespace hypercheck

#include "hypercheck/formal_series.hpp"

#include <sstream>
#include <stdexcept>

#include "hypercheck/errors.hpp"
#include "hypercheck/pochhammer.hpp"

namespace hypercheck {
namespace {

void require_same_order(const FormalSeries& p, const FormalSeries& q, const char* op) {
  if (p.order() != q.order()) {
    throw OrderMismatch(std::string(op) + ": order " + std::to_string(p.order()) + " vs " +
                        std::to_string(q.order()));
  }
}

}  // namespace

FormalSeries::FormalSeries(long order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  coeffs_.resize(static_cast<std::size_t>(order));
}

FormalSeries::FormalSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {}

FormalSeries FormalSeries::from_polynomial(const RatPoly& p, long order) {
  FormalSeries out(order);
  for (long j = 0; j < order && j <= p.degree(); ++j) out.coeffs_[static_cast<std::size_t>(j)] = p.coefficient(j);
  return out;
}

std::optional<long> FormalSeries::first_difference(const FormalSeries& other) const {
  require_same_order(*this, other, "first_difference");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] != other.coeffs_[j]) return static_cast<long>(j);
  }
  return std::nullopt;
}

bool FormalSeries::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string FormalSeries::str() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t j = 0; j < coeffs_.size(); ++j) out << (j ? ", " : "") << coeffs_[j];
  out << "]";
  return out.str();
}

FormalSeries& FormalSeries::operator+=(const FormalSeries& rhs) {
  require_same_order(*this, rhs, "series_add");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += rhs.coeffs_[j];
  return *this;
}

FormalSeries& FormalSeries::operator-=(const FormalSeries& rhs) {
  require_same_order(*this, rhs, "series_sub");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= rhs.coeffs_[j];
  return *this;
}

FormalSeries& FormalSeries::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  return *this;
}

FormalSeries series_from_hyp(const SeriesSpec& spec, long order) {
  FormalSeries zero(order);
  std::vector<Rational> coeffs(static_cast<std::size_t>(order));
  if (order == 0) return zero;
  coeffs[0] = Rational(1);
  Rational term(1);
  for (long j = 0; j + 1 < order; ++j) {
    Rational ratio = spec.argument;
    bool truncated = false;
    for (const auto& a : spec.top) {
      const Rational factor = a + Rational(j);
      if (factor.is_zero()) truncated = true;
      ratio *= factor;
    }
    if (truncated) break;
    for (const auto& b : spec.bottom) {
      const Rational factor = b + Rational(j);
      if (factor.is_zero()) {
        throw PoleError("bottom parameter " + b.str() + " of " + spec.str() + " vanishes in (b)_" +
                        std::to_string(j + 1) + " at index " + std::to_string(j + 1));
      }
      ratio /= factor;
    }
    ratio /= Rational(j + 1);
    term *= ratio;
    coeffs[static_cast<std::size_t>(j + 1)] = term;
  }
  return FormalSeries(std::move(coeffs));
}

FormalSeries series_mul(const FormalSeries& p, const FormalSeries& q) {
  require_same_order(p, q, "series_mul");
  const long order = p.order();
  std::vector<Rational> out(static_cast<std::size_t>(order));
  for (long n = 0; n < order; ++n) {
    Rational acc;
    for (long k = 0; k <= n; ++k) {
      if (p[k].is_zero() || q[n - k].is_zero()) continue;
      acc += p[k] * q[n - k];
    }
    out[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return FormalSeries(std::move(out));
}

FormalSeries series_shift_mul(const FormalSeries& p, long power, const Rational& scale) {
  if (power < 0) throw std::invalid_argument("series_shift_mul: negative power");
  const long order = p.order();
  std::vector<Rational> out(static_cast<std::size_t>(order));
  for (long j = power; j < order; ++j) out[static_cast<std::size_t>(j)] = scale * p[j - power];
  return FormalSeries(std::move(out));
}

FormalSeries series_exp(long order) {
  if (order < 1) throw std::invalid_argument("series_exp: order must be >= 1");
  std::vector<Rational> out(static_cast<std::size_t>(order));
  Rational term(1);
  for (long j = 0; j < order; ++j) {
    if (j > 0) term /= Rational(j);
    out[static_cast<std::size_t>(j)] = term;
  }
  return FormalSeries(std::move(out));
}

FormalSeries series_binomial(const Rational& exponent, long order) {
  if (order < 1) throw std::invalid_argument("series_binomial: order must be >= 1");
  std::vector<Rational> out(static_cast<std::size_t>(order));
  const Rational minus_e = -exponent;
  for (long j = 0; j < order; ++j) {
    out[static_cast<std::size_t>(j)] = pochhammer(minus_e, j) * reciprocal_factorial(j);
  }
  return FormalSeries(std::move(out));
}

}  // namespace hypercheck

#include "hypercheck/big_float.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace hypercheck {
namespace {

mpfr_prec_t checked_precision(long bits) {
  if (bits < MPFR_PREC_MIN || bits > 1'000'000) throw std::invalid_argument("unsupported precision");
  return static_cast<mpfr_prec_t>(bits);
}

}  // namespace

BigFloat::BigFloat(long precision_bits) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(const Rational& value, long precision_bits, mpfr_rnd_t rnd) {
  mpfr_init2(value_, checked_precision(precision_bits));
  mpfr_set_q(value_, value.gmp().get_mpq_t(), rnd);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

BigFloat BigFloat::power_of_two(long exponent, long precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set_ui_2exp(out.value_, 1, exponent, MPFR_RNDN);
  return out;
}

std::string BigFloat::str(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  if (digits <= 0) {
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  }
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exponent = 0;
  char* raw = mpfr_get_str(nullptr, &exponent, 10, static_cast<std::size_t>(digits), value_, MPFR_RNDN);
  std::unique_ptr<char, void (*)(char*)> guard(raw, [](char* p) { mpfr_free_str(p); });
  std::string mantissa(raw);
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  out += "e" + std::to_string(static_cast<long>(exponent) - 1);
  return out;
}

BigFloat BigFloat::with_precision(long precision_bits, mpfr_rnd_t rnd) const {
  BigFloat out(precision_bits);
  mpfr_set(out.value_, value_, rnd);
  return out;
}

BigFloat BigFloat::abs() const {
  BigFloat out(precision());
  mpfr_abs(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::add(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat out(std::min(a.precision(), b.precision()));
  mpfr_add(out.value_, a.value_, b.value_, rnd);
  return out;
}

BigFloat BigFloat::sub(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat out(std::min(a.precision(), b.precision()));
  mpfr_sub(out.value_, a.value_, b.value_, rnd);
  return out;
}

BigFloat BigFloat::mul(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat out(std::min(a.precision(), b.precision()));
  mpfr_mul(out.value_, a.value_, b.value_, rnd);
  return out;
}

BigFloat BigFloat::div(const BigFloat& a, const BigFloat& b, mpfr_rnd_t rnd) {
  BigFloat out(std::min(a.precision(), b.precision()));
  mpfr_div(out.value_, a.value_, b.value_, rnd);
  return out;
}

std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

}  // namespace hypercheck

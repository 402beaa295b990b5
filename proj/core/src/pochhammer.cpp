#include "hypercheck/pochhammer.hpp"

#include <stdexcept>
#include <string>

#include "hypercheck/errors.hpp"

namespace hypercheck {
namespace {

mpq_class rising(const mpq_class& a, long count) {
  mpq_class product(1);
  mpq_class factor = a;
  for (long j = 0; j < count; ++j) {
    product *= factor;
    factor += 1;
  }
  return product;
}

}  // namespace

Rational pochhammer(const Rational& a, long k) {
  if (k >= 0) return Rational(rising(a.gmp(), k));
  const mpq_class one_minus_a = 1 - a.gmp();
  mpq_class denominator = rising(one_minus_a, -k);
  if (sgn(denominator) == 0) {
    throw PoleError("pochhammer(" + a.str() + ", " + std::to_string(k) +
                    "): (1-a)_{-k} vanishes");
  }
  mpq_class out = 1 / denominator;
  if ((-k) % 2 != 0) out = -out;
  return Rational(std::move(out));
}

Rational factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of negative integer " + std::to_string(n));
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(out));
}

Rational reciprocal_factorial(long n) {
  if (n < 0) return Rational(0);
  return factorial(n).reciprocal();
}

Rational checked_reciprocal(const Rational& value, std::string_view what) {
  if (value.is_zero()) throw PoleError(std::string(what) + " vanishes");
  return value.reciprocal();
}

}  // namespace hypercheck

// SPDX-License-Identifier: Apache-2.0
#include "stirsum/big_real.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>

#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

Precision checked(Precision bits) {
  if (bits < MPFR_PREC_MIN || bits > (1L << 24)) throw ParameterError("precision out of range: " + std::to_string(bits));
  return bits;
}

}  // namespace

BigReal::BigReal(Precision bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Precision bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const ExactRational& value, Precision bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigInt& value, Precision bits) {
  mpfr_init2(value_, checked(bits));
  mpfr_set_z(value_, value.get_mpz_t(), MPFR_RNDN);
}

BigReal BigReal::parse(std::string_view text, Precision bits) {
  std::string s(text);
  BigReal r(bits);
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(r.value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) throw ParameterError("malformed number: '" + s + "'");
  return r;
}

BigReal BigReal::from_double(double value, Precision bits) {
  BigReal r(bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::at_precision(Precision bits) const {
  BigReal r(bits);
  mpfr_set(r.value_, value_, MPFR_RNDN);
  return r;
}

ExactRational BigReal::to_rational() const {
  if (!is_finite()) throw DomainError("non-finite value has no rational form");
  ExactRational q;
  mpfr_get_q(q.get_mpq_t(), value_);
  return q;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return sign() < 0 ? "-inf" : "inf";
  digits = std::max(digits, 1);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", digits - 1, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> owned(raw, &mpfr_free_str);
  return std::string(raw);
}

BigReal BigReal::operator-() const {
  BigReal r(precision());
  mpfr_neg(r.value_, value_, MPFR_RNDN);
  return r;
}

namespace {

// Widen `lhs` so a binary result carries the larger operand precision.
void widen(mpfr_ptr lhs, mpfr_srcptr rhs) {
  if (mpfr_get_prec(rhs) > mpfr_get_prec(lhs)) mpfr_prec_round(lhs, mpfr_get_prec(rhs), MPFR_RNDN);
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const ExactRational& rhs) {
  mpfr_mul_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator+=(const ExactRational& rhs) {
  mpfr_add_q(value_, value_, rhs.get_mpq_t(), MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigInt& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), MPFR_RNDN);
  return *this;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal abs(BigReal x) {
  mpfr_abs(x.get(), x.get(), MPFR_RNDN);
  return x;
}

#define STIRSUM_UNARY(name, fn)                 \
  BigReal name(const BigReal& x) {              \
    BigReal r(x.precision());                   \
    fn(r.get(), x.get(), MPFR_RNDN);            \
    return r;                                   \
  }

STIRSUM_UNARY(sqrt, mpfr_sqrt)
STIRSUM_UNARY(log, mpfr_log)
STIRSUM_UNARY(exp, mpfr_exp)
STIRSUM_UNARY(sin, mpfr_sin)
STIRSUM_UNARY(cos, mpfr_cos)

#undef STIRSUM_UNARY

BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.get(), base.get(), exponent.get(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base.precision());
  mpfr_pow_si(r.get(), base.get(), exponent, MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal exp2(long e, Precision bits) {
  BigReal r(1L, bits);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}

BigReal pi(Precision bits) {
  BigReal r(bits);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

BigReal log_two(Precision bits) {
  BigReal r(bits);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

bool within(const BigReal& a, const BigReal& b, const BigReal& tol) { return !(abs(a - b) > tol); }

}  // namespace stirsum

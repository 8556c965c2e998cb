// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mpfr.h>

#include <compare>
#include <string>
#include <string_view>

#include "stirsum/exact.hpp"

namespace stirsum {

// Working precision in bits.
using Precision = long;

inline constexpr Precision kMinPrecision = 64;

// Arbitrary-precision binary floating-point number with an explicit working
// precision. Binary operations produce a result at the larger of the two
// operand precisions; every operation rounds to nearest.
class BigReal {
 public:
  explicit BigReal(Precision bits = 128);
  BigReal(long value, Precision bits);
  BigReal(const ExactRational& value, Precision bits);
  BigReal(const BigInt& value, Precision bits);

  // Throws ParameterError if `text` is not a decimal number.
  static BigReal parse(std::string_view text, Precision bits);
  static BigReal from_double(double value, Precision bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  Precision precision() const { return mpfr_get_prec(value_); }
  // Copy rounded to `bits`.
  BigReal at_precision(Precision bits) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  // The exact dyadic rational held by this value. Throws DomainError on
  // NaN or infinity.
  ExactRational to_rational() const;
  // Scientific notation with `digits` significant decimal digits.
  std::string to_string(int digits) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  bool is_integer() const { return mpfr_integer_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  // floor(log2 |x|) + 1 for nonzero finite x.
  long exponent2() const { return mpfr_get_exp(value_); }

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal& operator*=(const ExactRational& rhs);
  BigReal& operator+=(const ExactRational& rhs);
  BigReal& operator*=(const BigInt& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, const ExactRational& rhs) { return lhs *= rhs; }
  friend BigReal operator*(const ExactRational& lhs, BigReal rhs) { return rhs *= lhs; }
  friend BigReal operator+(BigReal lhs, const ExactRational& rhs) { return lhs += rhs; }
  friend BigReal operator+(const ExactRational& lhs, BigReal rhs) { return rhs += lhs; }
  friend BigReal operator-(BigReal lhs, const ExactRational& rhs) { return lhs += -rhs; }
  friend BigReal operator-(const ExactRational& lhs, const BigReal& rhs) { return -rhs + lhs; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) > 0; }

 private:
  mpfr_t value_;
};

BigReal abs(BigReal x);
BigReal sqrt(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal pow(const BigReal& base, long exponent);
BigReal floor(const BigReal& x);
BigReal max(const BigReal& a, const BigReal& b);
// 2^e at the given precision.
BigReal exp2(long e, Precision bits);

BigReal pi(Precision bits);
BigReal log_two(Precision bits);

// |a - b| <= tol.
bool within(const BigReal& a, const BigReal& b, const BigReal& tol);

}  // namespace stirsum

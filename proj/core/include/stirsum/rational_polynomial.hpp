// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "stirsum/big_real.hpp"
#include "stirsum/exact.hpp"

namespace stirsum {

// Dense polynomial over the rationals; coefficient i multiplies t^i.
// The highest stored coefficient is nonzero, and the zero polynomial has no
// coefficients at all.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<ExactRational> coefficients);
  RationalPolynomial(std::initializer_list<ExactRational> coefficients);

  static RationalPolynomial monomial(unsigned degree, const ExactRational& c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<ExactRational>& coefficients() const { return coeffs_; }
  ExactRational coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : ExactRational(0); }

  ExactRational operator()(const ExactRational& t) const;
  BigReal operator()(const BigReal& t) const;

  // p(t + shift)
  RationalPolynomial shifted(const ExactRational& shift) const;

  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const ExactRational& s);

  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const ExactRational& s) { return a *= s; }
  friend RationalPolynomial operator*(const ExactRational& s, RationalPolynomial a) { return a *= s; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Human-readable form in the variable `var`, highest power first.
  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<ExactRational> coeffs_;
};

}  // namespace stirsum

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "stirsum/big_real.hpp"
#include "stirsum/exact.hpp"

namespace stirsum {

struct ComplexRational {
  ExactRational re;
  ExactRational im;

  bool is_real() const { return im == 0; }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ExactRational& s) { return {a.re * s, a.im * s}; }
  friend ComplexRational operator/(const ComplexRational& a, const ExactRational& s) { return {a.re / s, a.im / s}; }
  friend bool operator==(const ComplexRational& a, const ComplexRational& b) { return a.re == b.re && a.im == b.im; }
};

// Parses "2.5", "1/2", "0.5+3i", "-1-2.25i", "3i". Throws ParameterError.
ComplexRational parse_complex(std::string_view text);
std::string to_string(const ComplexRational& z);

class ComplexReal {
 public:
  explicit ComplexReal(Precision bits) : re_(bits), im_(bits) {}
  ComplexReal(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexReal(const ComplexRational& z, Precision bits) : re_(z.re, bits), im_(z.im, bits) {}

  const BigReal& re() const { return re_; }
  const BigReal& im() const { return im_; }
  Precision precision() const { return re_.precision(); }

  ComplexReal& operator+=(const ComplexReal& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  ComplexReal& operator-=(const ComplexReal& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  ComplexReal& operator*=(const BigReal& s) {
    re_ *= s;
    im_ *= s;
    return *this;
  }

  friend ComplexReal operator+(ComplexReal a, const ComplexReal& b) { return a += b; }
  friend ComplexReal operator-(ComplexReal a, const ComplexReal& b) { return a -= b; }
  friend ComplexReal operator*(ComplexReal a, const BigReal& s) { return a *= s; }
  friend ComplexReal operator*(const ComplexReal& a, const ComplexReal& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend ComplexReal operator/(const ComplexReal& a, const ComplexReal& b) {
    BigReal n = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
  }
  ComplexReal operator-() const { return {-re_, -im_}; }

  BigReal abs() const { return sqrt(re_ * re_ + im_ * im_); }

 private:
  BigReal re_;
  BigReal im_;
};

ComplexReal exp(const ComplexReal& z);
// base^exponent for real base > 0.
ComplexReal pow(const BigReal& base, const ComplexReal& exponent);

}  // namespace stirsum

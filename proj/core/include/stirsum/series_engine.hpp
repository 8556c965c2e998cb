// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "stirsum/big_real.hpp"
#include "stirsum/combinatorics.hpp"
#include "stirsum/complex.hpp"
#include "stirsum/exact.hpp"
#include "stirsum/quadrature.hpp"

namespace stirsum {

enum class TruncationStatus { converged, max_order_reached, divergence_guard_tripped };

std::string to_string(TruncationStatus status);

struct TruncationPolicy {
  enum class Mode { fixed, adaptive };

  Mode mode = Mode::adaptive;
  BigReal tolerance = BigReal::from_double(1e-30, 128);
  // Adaptive mode stops by order max_order; fixed mode sums exactly max_order terms.
  unsigned max_order = 64;
  unsigned divergence_guard = 3;
  // Adaptive mode never declares convergence before this many terms, so
  // vanishing leading terms cannot end the sum early.
  unsigned min_order = 8;

  static TruncationPolicy fixed(unsigned order);
  static TruncationPolicy adaptive(const BigReal& tolerance, unsigned max_order = 64);
};

struct FormulaResult {
  BigReal value;
  // Imaginary part for complex-parameter evaluations.
  std::optional<BigReal> imag;
  unsigned orders_used = 0;
  std::vector<BigReal> term_magnitudes;
  BigReal error_estimate;
  TruncationStatus status = TruncationStatus::converged;
};

struct FactorialSeriesTerm {
  unsigned k = 0;
  BigReal numerator;
  BigReal denominator;
  BigReal value;
};

// Yields terms in increasing k; an empty optional ends the stream.
using TermStream = std::function<std::optional<BigReal>()>;
using ComplexTermStream = std::function<std::optional<ComplexReal>()>;

// Sums a term stream under `policy`. Adaptive mode stops once two
// consecutive terms fall below tolerance * max(1, |partial sum|). The error
// estimate is the magnitude of the first omitted term (the second one if the
// first vanishes) when the stream can supply it, otherwise of the last
// included one.
FormulaResult adaptive_truncate(const TermStream& terms, const TruncationPolicy& policy);
// Complex terms; magnitudes are moduli and the result carries `imag`.
FormulaResult adaptive_truncate(const ComplexTermStream& terms, const TruncationPolicy& policy);

// l -> a_l feeding the factorial-series transform. Implementations either
// supply exact rationals (is_exact) or reals at a requested precision.
// With start_index 0 the transform gains a leading k = 0 term a_0 / D_0.
class CoefficientSeries {
 public:
  virtual ~CoefficientSeries() = default;
  virtual unsigned start_index() const { return 1; }
  virtual bool is_exact() const = 0;
  virtual ExactRational exact_coefficient(unsigned l) const;
  virtual BigReal coefficient(unsigned l, Precision bits) const;
};

class ExactCoefficients final : public CoefficientSeries {
 public:
  explicit ExactCoefficients(std::function<ExactRational(unsigned)> fn, unsigned start = 1) : fn_(std::move(fn)), start_(start) {}
  unsigned start_index() const override { return start_; }
  bool is_exact() const override { return true; }
  ExactRational exact_coefficient(unsigned l) const override { return fn_(l); }

 private:
  std::function<ExactRational(unsigned)> fn_;
  unsigned start_;
};

class RealCoefficients final : public CoefficientSeries {
 public:
  explicit RealCoefficients(std::function<BigReal(unsigned, Precision)> fn, unsigned start = 1) : fn_(std::move(fn)), start_(start) {}
  unsigned start_index() const override { return start_; }
  bool is_exact() const override { return false; }
  BigReal coefficient(unsigned l, Precision bits) const override { return fn_(l, bits); }

 private:
  std::function<BigReal(unsigned, Precision)> fn_;
  unsigned start_;
};

enum class DenominatorShift {
  at_x,      // (x)_{k+1} = x (x+1) ... (x+k)
  at_x_plus_1  // (x+1)_k = (x+1) ... (x+k)
};

// sum_{k>=1} (-1)^k [sum_{l=1}^{k} (-1)^l S(k,l) a_l] / D_k, plus a_0 / D_0
// when the series starts at index 0.
// Throws CapacityError when the policy needs more Stirling rows than `stirling` holds.
FormulaResult weniger_transform(const CoefficientSeries& series, const BigReal& x, const StirlingTable& stirling, const TruncationPolicy& policy,
                                DenominatorShift shift);

// Lazily produced factorial-series terms; the stream behind weniger_transform.
class WenigerTermStream {
 public:
  WenigerTermStream(const CoefficientSeries& series, const BigReal& x, const StirlingTable& stirling, DenominatorShift shift, unsigned max_k);
  std::optional<FactorialSeriesTerm> next();

 private:
  void extend_coefficients(unsigned l);

  const CoefficientSeries& series_;
  const StirlingTable& stirling_;
  Precision bits_;
  Precision real_bits_;
  unsigned max_k_;
  unsigned start_;
  unsigned k_ = 0;
  bool started_ = false;
  PochhammerStepper denominator_;
  std::vector<BigInt> scaled_;  // a_l * common_, exact path
  BigInt common_ = 1;
  std::vector<BigReal> real_;
};

// A function with derivatives of every order and a definite integral.
struct SmoothFunction {
  std::function<BigReal(const BigReal& t, unsigned order)> derivative;
  std::function<BigReal(const BigReal& a, const BigReal& b)> integral;
  std::function<BigReal(long k, Precision bits)> at_integer;
};

// (alpha t + beta)^p.
SmoothFunction affine_power(const ExactRational& p, const ExactRational& alpha = 1, const ExactRational& beta = 0);
SmoothFunction log_function();

// Extended Euler-Maclaurin right-hand side for sum_{k=1}^{floor x} f(k),
// with the remainder integral done piecewise. Throws DomainError if x <= 1.
BigReal euler_maclaurin_finite(const SmoothFunction& f, const BigReal& x, unsigned m, const BigReal& quadrature_tolerance);

// Extended Boole right-hand side for sum_{k=1}^{floor x} (-1)^{k+1} f(k).
BigReal boole_finite(const SmoothFunction& f, const BigReal& x, unsigned m, const BigReal& quadrature_tolerance);

// Boole formula at an integer n, with the remainder integral over [1, n].
BigReal boole_integer(const SmoothFunction& f, long n, unsigned m, const BigReal& quadrature_tolerance, Precision bits);

}  // namespace stirsum

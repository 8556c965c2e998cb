// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "stirsum/big_real.hpp"
#include "stirsum/complex.hpp"
#include "stirsum/exact.hpp"
#include "stirsum/rational_polynomial.hpp"

namespace stirsum {

// Bernoulli numbers with B_1 = -1/2.
ExactRational bernoulli_number(unsigned k);
BigInt euler_number(unsigned k);
const RationalPolynomial& bernoulli_polynomial(unsigned n);
const RationalPolynomial& euler_polynomial(unsigned n);

// B_0(t), ..., B_n(t) (or E) at a rational point.
std::vector<ExactRational> bernoulli_values(unsigned n, const ExactRational& t);
std::vector<ExactRational> euler_values(unsigned n, const ExactRational& t);

// Triangle of signed Stirling numbers of the first kind, defined through
// (x)_k = (-1)^k sum_l (-1)^l S(k, l) x^l, i.e. the classical s(k, l).
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_k);

  unsigned max_k() const { return max_k_; }
  // Throws RangeError unless 0 <= l <= k <= max_k.
  const BigInt& at(long k, long l) const;
  const std::vector<BigInt>& row(unsigned k) const { return rows_.at(k); }

 private:
  unsigned max_k_;
  std::vector<std::vector<BigInt>> rows_;
};

const BigInt& stirling_first(const StirlingTable& table, long k, long l);

// Shared table holding at least `max_k` rows; grows monotonically.
std::shared_ptr<const StirlingTable> stirling_table(unsigned max_k);

BigReal pochhammer(const BigReal& x, unsigned k);
ExactRational pochhammer(const ExactRational& x, unsigned k);

// Rising product that extends one factor at a time:
// value() = (x)_n after n calls to advance().
class PochhammerStepper {
 public:
  explicit PochhammerStepper(BigReal x) : next_(std::move(x)), value_(1L, next_.precision()) {}
  const BigReal& value() const { return value_; }
  unsigned count() const { return count_; }
  void advance() {
    value_ *= next_;
    next_ += ExactRational(1);
    ++count_;
  }

 private:
  BigReal next_;
  BigReal value_;
  unsigned count_ = 0;
};

// n!! for odd n, extended to negative n through n!! = (n+2)!!/(n+2).
// Throws DomainError for even n.
ExactRational double_factorial_odd(long n);

ExactRational generalized_binomial(const ExactRational& m, unsigned l);
BigReal generalized_binomial(const BigReal& m, unsigned l);
ComplexRational generalized_binomial(const ComplexRational& m, unsigned l);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

}  // namespace stirsum

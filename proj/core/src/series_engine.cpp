// SPDX-License-Identifier: Apache-2.0
#include "stirsum/series_engine.hpp"

#include <cmath>
#include <type_traits>

#include "stirsum/errors.hpp"

namespace stirsum {

std::string to_string(TruncationStatus status) {
  switch (status) {
    case TruncationStatus::converged:
      return "converged";
    case TruncationStatus::max_order_reached:
      return "max_order_reached";
    case TruncationStatus::divergence_guard_tripped:
      return "divergence_guard_tripped";
  }
  return "unknown";
}

TruncationPolicy TruncationPolicy::fixed(unsigned order) {
  TruncationPolicy p;
  p.mode = Mode::fixed;
  p.max_order = order;
  return p;
}

TruncationPolicy TruncationPolicy::adaptive(const BigReal& tolerance, unsigned max_order) {
  TruncationPolicy p;
  p.mode = Mode::adaptive;
  p.tolerance = tolerance;
  p.max_order = max_order;
  return p;
}

namespace {

BigReal magnitude(const BigReal& v) { return abs(v); }
BigReal magnitude(const ComplexReal& v) { return v.abs(); }

template <typename T>
FormulaResult truncate_stream(const std::function<std::optional<T>()>& terms, const TruncationPolicy& policy) {
  if (policy.max_order < 1) throw ParameterError("max_order must be at least 1");
  const bool adaptive = policy.mode == TruncationPolicy::Mode::adaptive;
  if (adaptive && !(policy.tolerance > 0)) throw ParameterError("adaptive tolerance must be positive");

  FormulaResult r;
  std::optional<T> sum;
  std::optional<BigReal> last;
  unsigned growing = 0;
  bool previous_small = false;
  bool exhausted = false;
  r.status = adaptive ? TruncationStatus::max_order_reached : TruncationStatus::converged;

  while (r.orders_used < policy.max_order) {
    std::optional<T> t = terms();
    if (!t) {
      exhausted = true;
      r.status = TruncationStatus::converged;
      break;
    }
    BigReal mag = magnitude(*t);
    if (sum) {
      *sum += *t;
    } else {
      sum = std::move(*t);
    }
    ++r.orders_used;
    growing = (last && mag > *last) ? growing + 1 : 0;
    r.term_magnitudes.push_back(mag);
    last = std::move(mag);

    if (policy.divergence_guard > 0 && growing >= policy.divergence_guard) {
      r.status = TruncationStatus::divergence_guard_tripped;
      break;
    }
    if (adaptive) {
      BigReal scale = magnitude(*sum);
      if (scale < 1) scale = BigReal(1L, scale.precision());
      // two small terms in a row, so an isolated zero cannot stop the sum
      const bool small = *last < policy.tolerance * scale;
      if (small && previous_small && r.orders_used >= policy.min_order) {
        r.status = TruncationStatus::converged;
        break;
      }
      previous_small = small;
    }
  }

  const Precision bits = last ? last->precision() : policy.tolerance.precision();
  if constexpr (std::is_same_v<T, ComplexReal>) {
    r.value = sum ? sum->re() : BigReal(bits);
    r.imag = sum ? sum->im() : BigReal(bits);
  } else {
    r.value = sum ? *sum : BigReal(bits);
  }
  if (exhausted) {
    r.error_estimate = BigReal(bits);
  } else if (std::optional<T> peek = terms()) {
    r.error_estimate = magnitude(*peek);
    // an omitted term that vanishes says nothing, look one further
    if (r.error_estimate.is_zero()) {
      if (std::optional<T> next = terms()) r.error_estimate = magnitude(*next);
    }
  } else {
    r.error_estimate = last ? *last : BigReal(bits);
  }
  return r;
}

}  // namespace

FormulaResult adaptive_truncate(const TermStream& terms, const TruncationPolicy& policy) { return truncate_stream<BigReal>(terms, policy); }

FormulaResult adaptive_truncate(const ComplexTermStream& terms, const TruncationPolicy& policy) {
  return truncate_stream<ComplexReal>(terms, policy);
}

ExactRational CoefficientSeries::exact_coefficient(unsigned) const { throw CapabilityError("coefficient series is not exact"); }

BigReal CoefficientSeries::coefficient(unsigned l, Precision bits) const { return BigReal(exact_coefficient(l), bits); }

namespace {

Precision cancellation_padding(unsigned max_k) {
  // log2 of the largest |S(k, l)| is below log2(k!).
  double bits = 0;
  for (unsigned i = 2; i <= max_k; ++i) bits += std::log2(static_cast<double>(i));
  return static_cast<Precision>(bits) + 64;
}

BigReal starting_point(const BigReal& x, DenominatorShift shift) {
  return shift == DenominatorShift::at_x ? x : x + ExactRational(1);
}

}  // namespace

WenigerTermStream::WenigerTermStream(const CoefficientSeries& series, const BigReal& x, const StirlingTable& stirling, DenominatorShift shift,
                                     unsigned max_k)
    : series_(series),
      stirling_(stirling),
      bits_(x.precision()),
      real_bits_(series.is_exact() ? x.precision() : x.precision() + cancellation_padding(max_k)),
      max_k_(max_k),
      start_(series.start_index()),
      denominator_(starting_point(x, shift)) {
  if (!(x > 0)) throw DomainError("factorial series needs x > 0");
  if (max_k > stirling.max_k()) throw CapacityError("Stirling table too small for requested order");
  if (start_ > 1) throw ParameterError("coefficient series must start at index 0 or 1");
  if (shift == DenominatorShift::at_x) denominator_.advance();
}

void WenigerTermStream::extend_coefficients(unsigned l) {
  while (scaled_.size() <= l) {
    const unsigned idx = static_cast<unsigned>(scaled_.size());
    if (idx < start_) {
      scaled_.emplace_back(0);
      real_.emplace_back(real_bits_);
    } else if (series_.is_exact()) {
      ExactRational a = series_.exact_coefficient(idx);
      const BigInt& den = a.get_den();
      if (den != common_) {
        BigInt lcm;
        mpz_lcm(lcm.get_mpz_t(), common_.get_mpz_t(), den.get_mpz_t());
        if (lcm != common_) {
          const BigInt factor = lcm / common_;
          for (auto& s : scaled_) s *= factor;
          common_ = lcm;
        }
      }
      scaled_.push_back(a.get_num() * (common_ / den));
    } else {
      scaled_.emplace_back(0);
      real_.push_back(series_.coefficient(idx, real_bits_));
    }
  }
}

std::optional<FactorialSeriesTerm> WenigerTermStream::next() {
  FactorialSeriesTerm term;
  if (start_ == 0 && !started_) {
    started_ = true;
    extend_coefficients(0);
    term.k = 0;
    term.numerator = series_.is_exact() ? BigReal(make_rational(scaled_[0], common_), bits_) : real_[0].at_precision(bits_);
    term.denominator = denominator_.value();
    term.value = term.numerator / term.denominator;
    return term;
  }
  started_ = true;
  if (k_ >= max_k_) return std::nullopt;
  ++k_;
  extend_coefficients(k_);
  denominator_.advance();

  term.k = k_;
  const auto& row = stirling_.row(k_);
  if (series_.is_exact()) {
    BigInt inner = 0;
    for (unsigned l = 1; l <= k_; ++l) {
      if (l % 2 == 0) {
        inner += row[l] * scaled_[l];
      } else {
        inner -= row[l] * scaled_[l];
      }
    }
    term.numerator = BigReal(make_rational(inner, common_), bits_);
  } else {
    BigReal inner(real_bits_);
    for (unsigned l = 1; l <= k_; ++l) {
      BigReal piece = real_[l] * row[l];
      if (l % 2 == 0) {
        inner += piece;
      } else {
        inner -= piece;
      }
    }
    term.numerator = inner.at_precision(bits_);
  }
  // The stepper was advanced once before the first term for (x)_{k+1}.
  term.denominator = denominator_.value();
  term.value = term.numerator / term.denominator;
  if (k_ % 2 == 1) term.value = -term.value;
  return term;
}

FormulaResult weniger_transform(const CoefficientSeries& series, const BigReal& x, const StirlingTable& stirling, const TruncationPolicy& policy,
                                DenominatorShift shift) {
  if (policy.max_order > stirling.max_k()) throw CapacityError("policy.max_order exceeds the Stirling table capacity");
  WenigerTermStream stream(series, x, stirling, shift, std::min(policy.max_order + 1, stirling.max_k()));
  return adaptive_truncate(
      [&]() -> std::optional<BigReal> {
        auto t = stream.next();
        if (!t) return std::nullopt;
        return std::move(t->value);
      },
      policy);
}

namespace {

// p (p-1) ... (p-n+1)
ExactRational falling(const ExactRational& p, unsigned n) {
  ExactRational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= p - i;
  return r;
}

BigReal rational_power(const BigReal& base, const ExactRational& e) {
  if (is_integer(e) && e.get_num().fits_slong_p()) return pow(base, e.get_num().get_si());
  if (e.get_den() == 2) return pow(sqrt(base), e.get_num().get_si());
  return pow(base, BigReal(e, base.precision()));
}

}  // namespace

SmoothFunction affine_power(const ExactRational& p, const ExactRational& alpha, const ExactRational& beta) {
  SmoothFunction f;
  f.derivative = [p, alpha, beta](const BigReal& t, unsigned order) {
    const ExactRational c = falling(p, order) * pow(alpha, order);
    if (c == 0) return BigReal(t.precision());
    return rational_power(t * alpha + beta, p - order) * c;
  };
  f.integral = [p, alpha, beta](const BigReal& a, const BigReal& b) {
    const BigReal ua = a * alpha + beta;
    const BigReal ub = b * alpha + beta;
    if (p == -1) return (log(ub) - log(ua)) * ExactRational(1 / alpha);
    const ExactRational q = p + 1;
    return (rational_power(ub, q) - rational_power(ua, q)) * ExactRational(1 / (alpha * q));
  };
  f.at_integer = [p, alpha, beta](long k, Precision bits) { return rational_power(BigReal(alpha * k + beta, bits), p); };
  return f;
}

SmoothFunction log_function() {
  SmoothFunction f;
  f.derivative = [](const BigReal& t, unsigned order) {
    if (order == 0) return log(t);
    BigReal r = pow(t, -static_cast<long>(order)) * ExactRational(factorial(order - 1));
    return order % 2 == 0 ? -r : r;
  };
  f.integral = [](const BigReal& a, const BigReal& b) { return b * log(b) - b - (a * log(a) - a); };
  f.at_integer = [](long k, Precision bits) { return log(BigReal(k, bits)); };
  return f;
}

BigReal euler_maclaurin_finite(const SmoothFunction& f, const BigReal& x, unsigned m, const BigReal& quadrature_tolerance) {
  if (!(x > 1)) throw DomainError("euler_maclaurin_finite needs x > 1");
  if (m < 1) throw ParameterError("euler_maclaurin_finite needs m >= 1");
  const Precision bits = x.precision();
  const BigReal one(1L, bits);
  const BigReal t = x - floor(x);

  BigReal total = f.integral(one, x);
  for (unsigned k = 1; k <= m; ++k) {
    const ExactRational inv_fact = make_rational(BigInt(1), factorial(k));
    BigReal at_x = bernoulli_polynomial(k)(t) * f.derivative(x, k - 1) * inv_fact;
    if (k % 2 == 1) at_x = -at_x;
    total += at_x;
    total -= f.derivative(one, k - 1) * (bernoulli_number(k) * inv_fact);
  }

  const RationalPolynomial& bm = bernoulli_polynomial(m);
  QuadratureOptions q;
  q.tolerance = quadrature_tolerance * ExactRational(factorial(m));
  BigReal remainder = integrate_piecewise(
      [&](const BigReal& s) { return bm(s - floor(s)) * f.derivative(s, m); }, one, x, q);
  remainder *= make_rational(BigInt(1), factorial(m));
  if (m % 2 == 0) remainder = -remainder;
  return total + remainder;
}

namespace {

BigReal boole_at_one(const SmoothFunction& f, unsigned m, Precision bits) {
  const BigReal one(1L, bits);
  BigReal acc(bits);
  for (unsigned k = 0; k <= m; ++k) {
    const ExactRational c = (pow(BigInt(2), k + 1) - 1) * bernoulli_number(k + 1) / ExactRational(factorial(k + 1));
    acc += f.derivative(one, k) * c;
  }
  return acc;
}

BigReal boole_remainder(const SmoothFunction& f, const BigReal& upper, unsigned m, const BigReal& quadrature_tolerance) {
  const Precision bits = upper.precision();
  const RationalPolynomial& em = euler_polynomial(m);
  QuadratureOptions q;
  q.tolerance = quadrature_tolerance * ExactRational(2 * factorial(m));
  BigReal integral = integrate_piecewise(
      [&](const BigReal& s) {
        const BigReal fl = floor(s);
        BigReal v = em(s - fl) * f.derivative(s, m + 1);
        return mpz_odd_p(BigInt(fl.to_rational()).get_mpz_t()) ? -v : v;
      },
      BigReal(1L, bits), upper, q);
  integral *= make_rational(BigInt(1), 2 * factorial(m));
  return m % 2 == 1 ? -integral : integral;
}

}  // namespace

BigReal boole_finite(const SmoothFunction& f, const BigReal& x, unsigned m, const BigReal& quadrature_tolerance) {
  if (!(x > 1)) throw DomainError("boole_finite needs x > 1");
  const Precision bits = x.precision();
  const BigReal fl = floor(x);
  const BigReal t = x - fl;
  const bool odd_floor = mpz_odd_p(BigInt(fl.to_rational()).get_mpz_t()) != 0;

  BigReal head(bits);
  for (unsigned k = 0; k <= m; ++k) {
    BigReal v = euler_polynomial(k)(t) * f.derivative(x, k) * make_rational(BigInt(1), factorial(k));
    if (k % 2 == 0) v = -v;
    head += v;
  }
  head /= 2L;
  if (odd_floor) head = -head;
  return head - boole_at_one(f, m, bits) + boole_remainder(f, x, m, quadrature_tolerance);
}

BigReal boole_integer(const SmoothFunction& f, long n, unsigned m, const BigReal& quadrature_tolerance, Precision bits) {
  if (n < 1) throw DomainError("boole_integer needs n >= 1");
  const BigReal nn(n, bits);
  BigReal head(bits);
  for (unsigned k = 0; k <= m; ++k) {
    const ExactRational c = (pow(BigInt(2), k + 1) - 1) * bernoulli_number(k + 1) / ExactRational(factorial(k + 1));
    BigReal v = f.derivative(nn, k) * c;
    if (k % 2 == 1) v = -v;
    head += v;
  }
  if (n % 2 == 1) head = -head;
  return head - boole_at_one(f, m, bits) + (n > 1 ? boole_remainder(f, nn, m, quadrature_tolerance) : BigReal(bits));
}

}  // namespace stirsum

// SPDX-License-Identifier: Apache-2.0
#include "stirsum/special_functions.hpp"

#include <algorithm>
#include <cmath>

#include "stirsum/combinatorics.hpp"
#include "stirsum/constants.hpp"
#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

// Extra bits for the cancellation in an alternating Maclaurin series whose
// largest term is about exp(e).
Precision cancellation_bits(double e) { return static_cast<Precision>(std::ceil(e * 1.4427)) + 16; }

// Absolute upper bound of |S| on the positive axis.
constexpr double kFresnelMax = 0.7139;

BigReal fresnel_series(const BigReal& z, Precision bits) {
  const double zd = z.to_double();
  const Precision work = bits + cancellation_bits(M_PI * zd * zd / 2);
  const BigReal zw = z.at_precision(work);
  const BigReal u = pi(work) * zw * zw / 2L;
  const BigReal u2 = u * u;
  const BigReal eps = exp2(-static_cast<long>(work), work);
  BigReal p = u;  // u^{2n+1}/(2n+1)!
  BigReal sum(work);
  for (long n = 0;; ++n) {
    BigReal term = p / (4 * n + 3);
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (abs(term) < eps && n > 2 * zd * zd) break;
    p *= u2;
    p /= (2 * n + 2) * (2 * n + 3);
  }
  return (sum * zw).at_precision(bits);
}

BigReal fresnel_asymptotic(const BigReal& z, Precision bits) {
  const Precision work = bits + 16 + 2 * std::max<long>(0, z.exponent2());
  const BigReal zw = z.at_precision(work);
  const BigReal p = pi(work);
  const BigReal w = p * zw * zw;
  const BigReal w2 = w * w;
  const BigReal eps = exp2(-static_cast<long>(work), work);
  BigReal f(1L, work);
  BigReal g(1L, work);
  BigReal a(1L, work);
  BigReal b(1L, work);
  bool f_done = false;
  bool g_done = false;
  for (long m = 1; !(f_done && g_done) && m < 100000; ++m) {
    if (!f_done) {
      BigReal next = -a * ((4 * m - 3) * (4 * m - 1)) / w2;
      if (!(abs(next) < abs(a)) || abs(next) < eps) {
        f_done = true;
      } else {
        a = std::move(next);
        f += a;
      }
    }
    if (!g_done) {
      BigReal next = -b * ((4 * m - 1) * (4 * m + 1)) / w2;
      if (!(abs(next) < abs(b)) || abs(next) < eps) {
        g_done = true;
      } else {
        b = std::move(next);
        g += b;
      }
    }
  }
  f /= p * zw;
  g /= p * p * zw * zw * zw;
  const BigReal half_w = w / 2L;
  BigReal s = BigReal(ExactRational(1, 2), work) - f * cos(half_w) - g * sin(half_w);
  return s.at_precision(bits);
}

BigReal ci_series(const BigReal& z, Precision bits) {
  const double zd = z.to_double();
  const Precision work = bits + cancellation_bits(zd);
  const BigReal zw = z.at_precision(work);
  const BigReal z2 = zw * zw;
  const BigReal eps = exp2(-static_cast<long>(work), work);
  BigReal p(1L, work);  // z^{2n}/(2n)!
  BigReal sum(work);
  for (long n = 1;; ++n) {
    p *= z2;
    p /= (2 * n - 1) * (2 * n);
    BigReal term = p / (2 * n);
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    if (abs(term) < eps && n > zd) break;
  }
  BigReal r = get_constant({ConstantId::euler_gamma, std::nullopt, work}) + log(zw) + sum;
  return r.at_precision(bits);
}

BigReal ci_asymptotic(const BigReal& z, Precision bits) {
  const Precision work = bits + 16 + std::max<long>(0, z.exponent2());
  const BigReal zw = z.at_precision(work);
  const BigReal z2 = zw * zw;
  const BigReal eps = exp2(-static_cast<long>(work), work);
  BigReal f(1L, work);
  BigReal g(1L, work);
  BigReal a(1L, work);
  BigReal b(1L, work);
  bool f_done = false;
  bool g_done = false;
  for (long m = 1; !(f_done && g_done) && m < 100000; ++m) {
    if (!f_done) {
      BigReal next = -a * ((2 * m - 1) * (2 * m)) / z2;
      if (!(abs(next) < abs(a)) || abs(next) < eps) {
        f_done = true;
      } else {
        a = std::move(next);
        f += a;
      }
    }
    if (!g_done) {
      BigReal next = -b * ((2 * m) * (2 * m + 1)) / z2;
      if (!(abs(next) < abs(b)) || abs(next) < eps) {
        g_done = true;
      } else {
        b = std::move(next);
        g += b;
      }
    }
  }
  f /= zw;
  g /= z2;
  BigReal r = f * sin(zw) - g * cos(zw);
  return r.at_precision(bits);
}

}  // namespace

BigReal fresnel_switch(Precision precision_bits) {
  return BigReal::from_double(std::max(8.0, std::sqrt(0.45 * static_cast<double>(precision_bits))), 64);
}

BigReal cos_integral_switch(Precision precision_bits) {
  return BigReal::from_double(std::max(20.0, 0.7 * static_cast<double>(precision_bits)), 64);
}

BigReal fresnel_s(const BigReal& z, Precision precision_bits) {
  if (z.is_zero()) return BigReal(precision_bits);
  if (z < 0) return -fresnel_s(-z, precision_bits);
  if (!(z > fresnel_switch(precision_bits))) return fresnel_series(z, precision_bits);
  return fresnel_asymptotic(z, precision_bits);
}

BigReal cos_integral(const BigReal& z, Precision precision_bits) {
  if (!(z > 0)) throw DomainError("Ci needs z > 0");
  if (!(z > cos_integral_switch(precision_bits))) return ci_series(z, precision_bits);
  return ci_asymptotic(z, precision_bits);
}

FormulaResult evaluate_slow(const SlowSeriesRequest& req) {
  if (!is_slow(req.formula)) throw ParameterError("evaluate_slow takes sqrt_fresnel or harmonic_cosint");
  if (!(req.x > 0)) throw ParameterError("x must be positive");
  if (req.outer_terms < 1) throw ParameterError("outer_terms must be at least 1");
  if (req.precision_bits < 64) throw ParameterError("precision must be at least 64 bits");
  const Precision bits = req.precision_bits + 16;
  const BigReal x(req.x, bits);
  const ExactRational t = fractional_part(req.x);

  std::function<BigReal(unsigned long)> term;
  BigReal closed(bits);
  if (req.formula == Family::sqrt_fresnel) {
    const BigReal sx = sqrt(x);
    const BigReal scale = -BigReal(1L, bits) / (pi(bits) * 2L);
    closed = x * sx * ExactRational(2, 3) - sx * ExactRational(t - ExactRational(1, 2));
    term = [&, scale](unsigned long k) {
      const BigReal kr(static_cast<long>(k), bits);
      return scale * fresnel_s(sqrt(kr * x) * 2L, bits) / (kr * sqrt(kr));
    };
  } else {
    closed = log(x) + get_constant({ConstantId::euler_gamma, std::nullopt, bits});
    const BigReal step = pi(bits) * x * 2L;
    term = [&, step](unsigned long k) { return cos_integral(step * static_cast<long>(k), bits) * 2L; };
  }

  FormulaResult r;
  BigReal sum(bits);
  for (unsigned long k = 1; k <= req.outer_terms; ++k) {
    BigReal v = term(k);
    r.term_magnitudes.push_back(abs(v).at_precision(req.precision_bits));
    sum += v;
  }
  r.orders_used = req.outer_terms;
  r.value = (closed + sum).at_precision(req.precision_bits);
  r.error_estimate = abs(term(req.outer_terms + 1UL)).at_precision(req.precision_bits);
  r.status = TruncationStatus::converged;
  return r;
}

BigReal slow_tail_bound(Family formula, const ExactRational& x, unsigned outer_terms) {
  const double K = outer_terms;
  const double xd = mpq_get_d(x.get_mpq_t());
  if (formula == Family::sqrt_fresnel) return BigReal::from_double(kFresnelMax / (M_PI * std::sqrt(K)), 64);
  if (formula == Family::harmonic_cosint) {
    const double s = std::abs(std::sin(M_PI * xd));
    const double first = s > 0 ? 1.0 / (2 * M_PI * (K + 1) * xd * s) : INFINITY;
    return BigReal::from_double(2 * (first + 1.0 / (4 * M_PI * M_PI * xd * xd * K)), 64);
  }
  throw ParameterError("no tail bound for " + to_string(formula));
}

}  // namespace stirsum

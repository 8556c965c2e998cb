// SPDX-License-Identifier: Apache-2.0
#include "stirsum/oracle.hpp"

#include <functional>

#include "stirsum/complex.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/special_functions.hpp"

namespace stirsum {

namespace {

constexpr Precision kPadBits = 32;

// Neumaier summation.
class CompensatedSum {
 public:
  explicit CompensatedSum(Precision bits) : sum_(bits), comp_(bits) {}
  void add(const BigReal& v) {
    BigReal t = sum_ + v;
    if (abs(sum_) >= abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = std::move(t);
  }
  BigReal value() const { return sum_ + comp_; }

 private:
  BigReal sum_;
  BigReal comp_;
};

struct Summands {
  long first = 1;
  std::function<ExactRational(long)> exact;
  std::function<BigReal(long, Precision)> real;
  std::function<ComplexReal(long, Precision)> complex;
};

ExactRational alt(long k) { return k % 2 == 0 ? -1 : 1; }  // (-1)^{k+1}

BigReal kpow(long k, const ExactRational& e, Precision bits) {
  const BigReal kr(k, bits);
  if (e.get_den() == 2) return pow(sqrt(kr), e.get_num().get_si());
  return pow(kr, BigReal(e, bits));
}

// k^m as an exact rational when m is an integer.
std::optional<ExactRational> exact_kpow(long k, const ExactRational& m) {
  if (!is_integer(m) || !m.get_num().fits_slong_p()) return std::nullopt;
  const long e = m.get_num().get_si();
  if (e >= 0) return ExactRational(pow(BigInt(k), static_cast<unsigned long>(e)));
  if (k == 0) return std::nullopt;
  return ExactRational(1) / ExactRational(pow(BigInt(k), static_cast<unsigned long>(-e)));
}

const ComplexRational& require_m(const FormulaParams& p) {
  if (!p.m) throw ParameterError("brute force needs m for this family");
  return *p.m;
}

const ExactRational& require_a(const FormulaParams& p) {
  if (!p.a) throw ParameterError("brute force needs a for this family");
  return *p.a;
}

Summands summands(Family family, const FormulaParams& params) {
  Summands s;
  switch (family) {
    case Family::harmonic:
    case Family::harmonic_cosint:
      s.exact = [](long k) { return ExactRational(1, k); };
      break;
    case Family::zeta2:
      s.exact = [](long k) { return ExactRational(1, k * k); };
      break;
    case Family::zeta3:
      s.exact = [](long k) { return ExactRational(ExactRational(1) / ExactRational(pow(BigInt(k), 3UL))); };
      break;
    case Family::sqrt:
    case Family::sqrt_fresnel:
      s.real = [](long k, Precision b) { return sqrt(BigReal(k, b)); };
      break;
    case Family::k_sqrt:
      s.real = [](long k, Precision b) { return sqrt(BigReal(k, b)) * k; };
      break;
    case Family::k2_sqrt:
      s.real = [](long k, Precision b) { return sqrt(BigReal(k, b)) * (k * k); };
      break;
    case Family::inv_sqrt:
      s.real = [](long k, Precision b) { return BigReal(1L, b) / sqrt(BigReal(k, b)); };
      break;
    case Family::zeta_3_2:
      s.real = [](long k, Precision b) { return BigReal(1L, b) / (sqrt(BigReal(k, b)) * k); };
      break;
    case Family::zeta_5_2:
      s.real = [](long k, Precision b) { return BigReal(1L, b) / (sqrt(BigReal(k, b)) * (k * k)); };
      break;
    case Family::faulhaber_ext:
    case Family::faulhaber_int:
    case Family::alt_faulhaber_finite:
    case Family::alt_faulhaber_gen: {
      const ComplexRational m = require_m(params);
      const bool alternating = family == Family::alt_faulhaber_finite || family == Family::alt_faulhaber_gen;
      if (!m.is_real()) {
        s.complex = [m, alternating](long k, Precision b) {
          ComplexReal v = pow(BigReal(k, b), ComplexReal(m, b));
          return alternating && k % 2 == 0 ? -v : v;
        };
      } else if (exact_kpow(1, m.re)) {
        s.exact = [m, alternating](long k) { return alternating ? ExactRational(alt(k) * *exact_kpow(k, m.re)) : *exact_kpow(k, m.re); };
      } else {
        s.real = [m, alternating](long k, Precision b) {
          BigReal v = kpow(k, m.re, b);
          return alternating && k % 2 == 0 ? -v : v;
        };
      }
      break;
    }
    case Family::log_factorial:
      s.real = [](long k, Precision b) { return log(BigReal(k, b)); };
      break;
    case Family::k_log_k:
      s.real = [](long k, Precision b) { return log(BigReal(k, b)) * k; };
      break;
    case Family::logk_over_k:
      s.real = [](long k, Precision b) { return log(BigReal(k, b)) / k; };
      break;
    case Family::logk_over_k2:
      s.real = [](long k, Precision b) { return log(BigReal(k, b)) / (k * k); };
      break;
    case Family::log_squared:
      s.real = [](long k, Precision b) {
        BigReal l = log(BigReal(k, b));
        return l * l;
      };
      break;
    case Family::gregory_leibniz:
      s.first = 0;
      s.exact = [](long k) { return ExactRational(k % 2 == 0 ? 1 : -1, 2 * k + 1); };
      break;
    case Family::alt_harmonic:
      s.exact = [](long k) { return ExactRational(alt(k) / k); };
      break;
    case Family::geometric_stirling:
    case Family::geometric_em: {
      const ExactRational a = require_a(params);
      s.first = 0;
      s.exact = [a](long k) { return pow(a, static_cast<unsigned long>(k)); };
      break;
    }
    case Family::alt_geometric_stirling:
    case Family::alt_geometric_em: {
      const ExactRational a = require_a(params);
      s.first = 0;
      s.exact = [a](long k) { return ExactRational(pow(a, static_cast<unsigned long>(k)) * (k % 2 == 0 ? 1 : -1)); };
      break;
    }
    case Family::exp_geometric:
      s.first = 0;
      s.real = [](long k, Precision b) { return exp(BigReal(k, b)); };
      break;
    case Family::self_counting:
      s.exact = [](long k) {
        // floor(1/2 + sqrt(2k)) = floor((1 + isqrt(8k)) / 2)
        BigInt r;
        mpz_sqrt(r.get_mpz_t(), BigInt(8 * k).get_mpz_t());
        BigInt q;
        mpz_fdiv_q_2exp(q.get_mpz_t(), BigInt(r + 1).get_mpz_t(), 1);
        return ExactRational(q);
      };
      break;
  }
  return s;
}

}  // namespace

BruteForceResult brute_force(Family family, const ExactRational& x, const FormulaParams& params, Precision precision_bits) {
  if (!(x > 0)) throw ParameterError("x must be positive");
  const BigInt nb = floor(x);
  if (!nb.fits_slong_p() || nb > 100000000) throw ParameterError("x too large for direct summation");
  const long n = nb.get_si();
  const Precision bits = precision_bits + kPadBits;
  const Summands s = summands(family, params);

  BruteForceResult r;
  if (s.exact) {
    ExactRational acc = 0;
    for (long k = s.first; k <= n; ++k) acc += s.exact(k);
    r.exact = acc;
    r.value = BigReal(acc, precision_bits);
  } else if (s.real) {
    CompensatedSum acc(bits);
    for (long k = s.first; k <= n; ++k) acc.add(s.real(k, bits));
    r.value = acc.value().at_precision(precision_bits);
  } else {
    CompensatedSum re(bits);
    CompensatedSum im(bits);
    for (long k = s.first; k <= n; ++k) {
      const ComplexReal v = s.complex(k, bits);
      re.add(v.re());
      im.add(v.im());
    }
    r.value = re.value().at_precision(precision_bits);
    r.imag = im.value().at_precision(precision_bits);
  }
  r.terms = n >= s.first ? static_cast<unsigned long>(n - s.first + 1) : 0;
  return r;
}

ConvergenceReport convergence_study(const FormulaId& formula, const ExactRational& x, const FormulaParams& params, unsigned max_order,
                                    Precision precision_bits) {
  if (max_order < 1) throw ParameterError("max_order must be at least 1");
  const CatalogEntry& entry = catalog_entry(formula);
  const ExactRational xe = entry.integer_x_only ? ExactRational(floor(x)) : x;
  const BruteForceResult truth = brute_force(formula.family, xe, params, precision_bits);

  ConvergenceReport report;
  report.formula = formula;
  report.x = xe;
  report.oracle_value = truth.value;
  report.oracle_cost = truth.terms;
  for (unsigned k = 1; k <= max_order; ++k) {
    FormulaResult r;
    if (entry.slow) {
      r = evaluate_slow({formula.family, xe, k, precision_bits});
    } else {
      EvalRequest req;
      req.formula = formula;
      req.x = xe;
      req.params = params;
      req.precision_bits = precision_bits;
      req.policy = TruncationPolicy::fixed(k);
      r = evaluate(req);
    }
    ConvergenceRow row;
    row.order = k;
    row.abs_error = abs(r.value - truth.value);
    if (r.imag && truth.imag) {
      const BigReal di = *r.imag - *truth.imag;
      row.abs_error = sqrt(row.abs_error * row.abs_error + di * di);
    }
    row.partial_value = std::move(r.value);
    row.term_magnitude = r.term_magnitudes.empty() ? BigReal(precision_bits) : r.term_magnitudes.back();
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace stirsum

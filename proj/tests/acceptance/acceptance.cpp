// SPDX-License-Identifier: Apache-2.0
// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "stirsum/stirsum.hpp"

using namespace stirsum;

namespace {

ExactRational Q(long n, long d = 1) { return make_rational(n, d); }
BigReal R(const char* s, Precision bits) { return BigReal::parse(s, bits); }

struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "first failure: " << what << "; ";
      ok = false;
    }
  }
};

std::string sci(const BigReal& v) { return v.to_string(3); }

RationalPolynomial poly(std::initializer_list<ExactRational> high_first) {
  std::vector<ExactRational> c(high_first);
  std::reverse(c.begin(), c.end());
  return RationalPolynomial(c);
}

EvalRequest request(const FormulaId& id, const ExactRational& x, const FormulaParams& params) {
  EvalRequest req;
  req.formula = id;
  req.x = x;
  req.params = params;
  req.precision_bits = 192;
  req.policy = TruncationPolicy::adaptive(R("1e-30", 192), 64);
  return req;
}

BigReal error_against_oracle(const FormulaResult& r, const BruteForceResult& b) {
  BigReal re = r.value - b.value;
  if (!r.imag && !b.imag) return abs(re);
  BigReal im = r.imag ? *r.imag : BigReal(192);
  if (b.imag) im -= *b.imag;
  return sqrt(re * re + im * im);
}

// 1: sqrt numerator polynomials; order 5 is pinned to a sympy re-expansion.
void criterion_1(Check& c) {
  const FormulaId id = parse_formula_id("sqrt.v1");
  const RationalPolynomial expected[] = {
      poly({Q(1, 4), Q(-1, 4), Q(1, 24)}),
      poly({Q(1, 24), Q(3, 16), Q(-11, 48), Q(1, 24)}),
      poly({Q(1, 64), Q(3, 32), Q(21, 64), Q(-7, 16), Q(53, 640)}),
      poly({Q(1, 128), Q(19, 256), Q(109, 384), Q(29, 32), Q(-977, 768), Q(79, 320)}),
      poly({Q(7, 1536), Q(33, 512), Q(1115, 3072), Q(215, 192), Q(10505, 3072), Q(-1909, 384), Q(9049, 9216)}),
  };
  const ExactRational at_zero[] = {Q(1, 24), Q(1, 24), Q(53, 640), Q(79, 320)};
  for (unsigned k = 1; k <= 5; ++k) {
    const RationalPolynomial p = numerator_polynomial(id, k);
    c.expect(p == expected[k - 1], "k=" + std::to_string(k) + " gives " + p.to_string());
    if (k <= 4) c.expect(p(Q(0)) == at_zero[k - 1], "t=0 value at k=" + std::to_string(k));
  }
  c.note << "k=1..5 polynomials compared exactly";
}

void criterion_2(Check& c) {
  BigReal worst(192);
  std::string worst_at;
  for (const char* xs : {"1.25", "3.7", "10.5", "25.0"}) {
    const ExactRational x = parse_rational(xs);
    const ExactRational truth = *brute_force(Family::harmonic, x, {}, 192).exact;
    for (unsigned v : {1u, 2u}) {
      const FormulaId id{Family::harmonic, v};
      const FormulaResult r = evaluate(request(id, x, {}));
      const BigReal err = abs(r.value - BigReal(truth, 192));
      c.expect(!(err > R("1e-20", 192)), to_string(id) + " at x=" + xs + " error " + sci(err));
      if (err > worst) {
        worst = err;
        worst_at = to_string(id) + " x=" + xs + " (" + to_string(r.status) + ", " + std::to_string(r.orders_used) + " orders)";
      }
    }
  }
  c.note << "worst error " << sci(worst) << " at " << worst_at;
}

void criterion_3(Check& c) {
  unsigned total = 0, passed = 0;
  BigReal worst(192);
  std::string worst_at;
  std::ostringstream failing;
  const auto run = [&](const FormulaId& id, const ExactRational& x, const FormulaParams& params, const std::string& label) {
    const FormulaResult r = evaluate(request(id, x, params));
    const BigReal err = error_against_oracle(r, brute_force(id.family, x, params, 192));
    ++total;
    if (!(err > R("1e-20", 192))) {
      ++passed;
    } else {
      failing << label << "=" << sci(err) << " ";
    }
    if (err > worst) {
      worst = err;
      worst_at = label;
    }
  };
  for (const char* xs : {"3.7", "10.5"}) {
    const ExactRational x0 = parse_rational(xs);
    for (const auto& e : list_formulas()) {
      if (e.slow || e.finite) continue;
      const ExactRational x = e.integer_x_only ? ExactRational(floor(x0)) : x0;
      const std::string label = to_string(e.id) + "@" + to_string(x);
      const auto& names = e.parameters;
      if (std::find(names.begin(), names.end(), "a") != names.end()) {
        for (const auto& a : {Q(1, 2), Q(2), Q(5)}) {
          FormulaParams p;
          p.a = a;
          run(e.id, x, p, label + ",a=" + to_string(a));
        }
      } else {
        run(e.id, x, default_params(e.id), label);
      }
    }
  }
  c.expect(passed == total, std::to_string(total - passed) + " evaluations outside 1e-20");
  c.note << passed << "/" << total << " within 1e-20; worst " << sci(worst) << " at " << worst_at;
  if (passed != total) std::fprintf(stderr, "criterion 3 outside contract: %s\n", failing.str().c_str());
}

void criterion_4(Check& c) {
  const FormulaId afin = parse_formula_id("alt_faulhaber_finite.v1");
  for (long m = 0; m <= 8; ++m) {
    for (long n = 1; n <= 100; ++n) {
      FormulaParams p;
      p.m = ComplexRational{Q(m), Q(0)};
      const FormulaResult r = evaluate(request(afin, Q(n), p));
      const ExactRational truth = *brute_force(Family::alt_faulhaber_finite, Q(n), p, 192).exact;
      c.expect(r.value == BigReal(truth, 192) && r.error_estimate.is_zero(), "alt_faulhaber_finite m=" + std::to_string(m) + " n=" + std::to_string(n));
    }
  }
  const FormulaId sc = parse_formula_id("self_counting.v1");
  for (long x = 1; x <= 200; ++x) {
    const FormulaResult r = evaluate(request(sc, Q(x), {}));
    const auto b = brute_force(Family::self_counting, Q(x), {}, 192);
    c.expect(b.exact && r.value == BigReal(*b.exact, 192) && r.error_estimate.is_zero(), "self_counting x=" + std::to_string(x));
  }
  for (const auto& a : {Q(1, 2), Q(2), Q(5), Q(7, 3)}) {
    for (long n = 1; n <= 30; ++n) {
      FormulaParams p;
      p.a = a;
      const auto g = brute_force(Family::geometric_stirling, Q(n), p, 192);
      c.expect(g.exact && *g.exact == (pow(a, n + 1) - 1) / (a - 1), "geometric a=" + to_string(a) + " n=" + std::to_string(n));
      const auto alt = brute_force(Family::alt_geometric_stirling, Q(n), p, 192);
      c.expect(alt.exact && *alt.exact == (pow(-a, n + 1) - 1) / (-a - 1), "alternating geometric a=" + to_string(a) + " n=" + std::to_string(n));
    }
  }
  c.note << "900 alternating Faulhaber, 200 self-counting, 240 geometric identities";
}

void criterion_5(Check& c) {
  const BigReal tol = R("1e-30", 192);
  struct Fn {
    const char* name;
    SmoothFunction f;
    std::function<BigReal(long)> at;
  };
  const std::vector<Fn> fns = {
      {"1/t", affine_power(-1), [](long k) { return BigReal(Q(1, k), 192); }},
      {"1/t^2", affine_power(-2), [](long k) { return BigReal(Q(1, k * k), 192); }},
      {"sqrt t", affine_power(Q(1, 2)), [](long k) { return sqrt(BigReal(k, 192)); }},
      {"log t", log_function(), [](long k) { return log(BigReal(k, 192)); }},
  };
  BigReal worst(192);
  for (const auto& fn : fns) {
    for (const char* xs : {"3.7", "10.5"}) {
      const BigReal x = R(xs, 192);
      const long n = static_cast<long>(x.to_double());
      BigReal plain(192), alternating(192);
      for (long k = 1; k <= n; ++k) {
        plain += fn.at(k);
        alternating += k % 2 ? fn.at(k) : -fn.at(k);
      }
      for (unsigned m : {2u, 5u}) {
        const BigReal e1 = abs(euler_maclaurin_finite(fn.f, x, m, tol) - plain);
        const BigReal e2 = abs(boole_finite(fn.f, x, m, tol) - alternating);
        const std::string at = std::string(fn.name) + " x=" + xs + " m=" + std::to_string(m);
        c.expect(!(e1 > tol), "Euler-Maclaurin " + at + " error " + sci(e1));
        c.expect(!(e2 > tol), "Boole " + at + " error " + sci(e2));
        worst = max(worst, max(e1, e2));
      }
    }
  }
  c.note << "32 identities, worst error " << sci(worst);
}

void criterion_6(Check& c) {
  BigReal worst(192);
  std::string worst_at;
  for (const char* xs : {"2.5", "7"}) {
    const BigReal x = R(xs, 192);
    for (unsigned l = 1; l <= 4; ++l) {
      ExactCoefficients series([l](unsigned j) { return ExactRational(j == l ? 1 : 0); });
      const auto policy = TruncationPolicy::adaptive(R("1e-30", 192), 64);
      const FormulaResult r = weniger_transform(series, x, *stirling_table(65), policy, DenominatorShift::at_x);
      const BigReal err = abs(r.value - pow(x, -static_cast<long>(l + 1)));
      c.expect(!(err > R("1e-25", 192)), "l=" + std::to_string(l) + " x=" + xs + " error " + sci(err));
      if (err > worst) {
        worst = err;
        worst_at = "l=" + std::to_string(l) + " x=" + xs + " (" + to_string(r.status) + ")";
      }
    }
  }
  c.note << "worst error " << sci(worst) << " at " << worst_at;
}

void criterion_7(Check& c) {
  const StirlingTable table(30);
  RationalPolynomial rising({Q(1)});
  for (unsigned k = 0; k <= 30; ++k) {
    if (k > 0) rising = rising * RationalPolynomial({Q(k - 1), Q(1)});
    std::vector<ExactRational> coeffs(k + 1);
    for (unsigned l = 0; l <= k; ++l) coeffs[l] = ExactRational(((k + l) % 2 == 0 ? 1 : -1) * table.at(k, l));
    c.expect(rising == RationalPolynomial(coeffs), "Pochhammer expansion k=" + std::to_string(k));
  }
  for (unsigned n = 0; n <= 30; ++n) {
    const auto& b = bernoulli_polynomial(n);
    const auto& e = euler_polynomial(n);
    if (n >= 1) c.expect(b.shifted(1) - b == RationalPolynomial::monomial(n - 1, static_cast<long>(n)), "Bernoulli difference n=" + std::to_string(n));
    c.expect(e.shifted(1) + e == RationalPolynomial::monomial(n, 2), "Euler difference n=" + std::to_string(n));
    c.expect(b(Q(0)) == bernoulli_number(n), "B_n(0) n=" + std::to_string(n));
    c.expect(e(Q(0)) == -2 * (pow(Q(2), n + 1) - 1) * bernoulli_number(n + 1) / static_cast<long>(n + 1), "E_n(0) n=" + std::to_string(n));
    if (n % 2 == 1) c.expect(euler_number(n) == 0, "odd Euler number n=" + std::to_string(n));
    if (n % 2 == 1 && n >= 3) c.expect(bernoulli_number(n) == 0, "odd Bernoulli number n=" + std::to_string(n));
  }
  for (long n = -9; n <= 31; n += 2) c.expect(double_factorial_odd(n) == n * double_factorial_odd(n - 2), "double factorial n=" + std::to_string(n));
  c.note << "Pochhammer k<=30, difference equations and values at 0 for n<=30";
}

void criterion_8(Check& c) {
  const Precision bits = 256;
  const BigReal tol = R("1e-50", bits);
  const auto zeta = [&](const ExactRational& s) { return get_constant({ConstantId::zeta, s, bits}); };
  const BigReal p = pi(bits);
  BigReal worst = abs(zeta(Q(2)) - p * p / 6L);
  // (-1)^m B_{m+1}/(m+1): the m = 0 case needs the sign under B_1 = -1/2
  for (unsigned m = 0; m <= 8; ++m) {
    const ExactRational expected = (m % 2 ? -1 : 1) * bernoulli_number(m + 1) / static_cast<long>(m + 1);
    worst = max(worst, abs(zeta(-Q(m)) - BigReal(expected, bits)));
  }
  for (const auto& s : {Q(1, 2), Q(3, 2), Q(2), Q(3)}) {
    const BigReal eta = get_constant({ConstantId::eta, s, bits});
    const BigReal factor = BigReal(1L, bits) - pow(BigReal(2L, bits), BigReal(1 - s, bits));
    worst = max(worst, abs(eta - factor * zeta(s)));
  }
  c.expect(!(worst > tol), "worst deviation " + sci(worst));
  c.note << "14 cross-checks, worst deviation " << sci(worst);
}

void criterion_9(Check& c) {
  struct Case {
    Family family;
    ExactRational x;
  };
  const std::vector<Case> cases = {{Family::sqrt_fresnel, Q(4)}, {Family::sqrt_fresnel, Q(21, 2)}, {Family::harmonic_cosint, Q(7, 2)},
                                   {Family::harmonic_cosint, Q(37, 10)}};
  for (const auto& cs : cases) {
    const BigReal truth = brute_force(cs.family, cs.x, {}, 128).value;
    for (unsigned k : {100u, 1000u, 10000u}) {
      const FormulaResult r = evaluate_slow({cs.family, cs.x, k, 128});
      const BigReal err = abs(r.value - truth);
      const BigReal bound = slow_tail_bound(cs.family, cs.x, k);
      const std::string at = to_string(cs.family) + " x=" + to_string(cs.x) + " K=" + std::to_string(k);
      c.expect(!(err > bound), at + " error " + sci(err) + " bound " + sci(bound));
      c.note << at << ": " << sci(err) << " <= " << sci(bound) << "; ";
    }
  }
}

void criterion_10(Check& c) {
  const ExactRational x = Q(21, 2);
  const ConvergenceReport rep = convergence_study(parse_formula_id("harmonic.v2"), x, {}, 20, 192);
  BigReal best_factorial = rep.rows.front().abs_error;
  for (const auto& row : rep.rows)
    if (row.abs_error < best_factorial) best_factorial = row.abs_error;
  c.expect(best_factorial < R("1e-15", 192), "factorial series best error within 20 orders " + sci(best_factorial));

  // raw inverse-power tail H = log x + gamma - sum_j B_j({x}) / (j x^j), scanned for its best truncation
  const BigReal xr(x, 192);
  const ExactRational t = fractional_part(x);
  const auto bv = bernoulli_values(200, t);
  const BigReal truth(*brute_force(Family::harmonic, x, {}, 192).exact, 192);
  BigReal partial = log(xr) + euler_gamma(192);
  BigReal best_raw = abs(partial - truth);
  unsigned best_order = 0;
  for (unsigned j = 1; j < 200; ++j) {
    const BigReal term = BigReal(bv[j] / static_cast<long>(j), 192) / pow(xr, static_cast<long>(j));
    partial -= term;
    const BigReal err = abs(partial - truth);
    if (err < best_raw) {
      best_raw = err;
      best_order = j;
    }
  }
  c.expect(best_raw > R("1e-13", 192), "raw asymptotic tail reaches " + sci(best_raw) + " at order " + std::to_string(best_order));
  c.note << "factorial series best error in 20 orders " << sci(best_factorial) << "; raw asymptotic optimum " << sci(best_raw) << " at order "
         << best_order;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* title;
    double budget_s;
    void (*fn)(Check&);
  };
  const Criterion criteria[] = {
      {1, "sqrt numerator polynomials exact", 1, criterion_1},
      {2, "harmonic end-to-end to 1e-20", 5, criterion_2},
      {3, "catalog oracle sweep to 1e-20", 60, criterion_3},
      {4, "exact identities", 10, criterion_4},
      {5, "Euler-Maclaurin and Boole finite forms", 30, criterion_5},
      {6, "Weniger single-power reproduction to 1e-25", 0, criterion_6},
      {7, "combinatorics property suite", 0, criterion_7},
      {8, "constants cross-checks at 50 digits", 0, criterion_8},
      {9, "slow formulas within tail bound", 60, criterion_9},
      {10, "rapid convergence evidence", 0, criterion_10},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.fn(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (cr.budget_s > 0 && secs > cr.budget_s) {
      check.ok = false;
      check.note << " (over the " << cr.budget_s << " s budget)";
    }
    failures += check.ok ? 0 : 1;
    std::printf("criterion %2d %s: %s [%.2f s] %s\n", cr.number, check.ok ? "PASS" : "FAIL", cr.title, secs, check.note.str().c_str());
  }
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures == 0 ? 0 : 1;
}

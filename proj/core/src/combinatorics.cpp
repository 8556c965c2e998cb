// SPDX-License-Identifier: Apache-2.0
#include "stirsum/combinatorics.hpp"

#include <deque>
#include <mutex>

#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<ExactRational> g_bernoulli{ExactRational(1)};

std::mutex g_euler_mutex;
std::vector<BigInt> g_euler{BigInt(1)};

std::mutex g_poly_mutex;
std::deque<RationalPolynomial> g_bernoulli_poly;
std::deque<RationalPolynomial> g_euler_poly;

std::mutex g_stirling_mutex;
std::shared_ptr<const StirlingTable> g_stirling;

}  // namespace

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

ExactRational bernoulli_number(unsigned k) {
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  while (g_bernoulli.size() <= k) {
    const unsigned n = static_cast<unsigned>(g_bernoulli.size());
    if (n > 1 && n % 2 == 1) {
      g_bernoulli.emplace_back(0);
      continue;
    }
    ExactRational acc = 0;
    for (unsigned j = 0; j < n; ++j) {
      if (g_bernoulli[j] != 0) acc += ExactRational(binomial(n + 1, j)) * g_bernoulli[j];
    }
    g_bernoulli.push_back(-acc / (n + 1));
  }
  return g_bernoulli[k];
}

BigInt euler_number(unsigned k) {
  std::lock_guard lock(g_euler_mutex);
  // sum_{j even} C(n, j) E_j = 0 for even n >= 2.
  while (g_euler.size() <= k) {
    const unsigned n = static_cast<unsigned>(g_euler.size());
    if (n % 2 == 1) {
      g_euler.emplace_back(0);
      continue;
    }
    BigInt acc = 0;
    for (unsigned j = 0; j < n; j += 2) acc += binomial(n, j) * g_euler[j];
    g_euler.push_back(-acc);
  }
  return g_euler[k];
}

const RationalPolynomial& bernoulli_polynomial(unsigned n) {
  {
    std::lock_guard lock(g_poly_mutex);
    if (n < g_bernoulli_poly.size()) return g_bernoulli_poly[n];
  }
  std::vector<ExactRational> b(n + 1);
  for (unsigned j = 0; j <= n; ++j) b[j] = bernoulli_number(j);
  std::lock_guard lock(g_poly_mutex);
  while (g_bernoulli_poly.size() <= n) {
    const unsigned d = static_cast<unsigned>(g_bernoulli_poly.size());
    std::vector<ExactRational> c(d + 1);
    for (unsigned j = 0; j <= d; ++j) c[d - j] = ExactRational(binomial(d, j)) * b[j];
    g_bernoulli_poly.emplace_back(std::move(c));
  }
  return g_bernoulli_poly[n];
}

const RationalPolynomial& euler_polynomial(unsigned n) {
  {
    std::lock_guard lock(g_poly_mutex);
    if (n < g_euler_poly.size()) return g_euler_poly[n];
  }
  std::vector<BigInt> e(n + 1);
  for (unsigned j = 0; j <= n; ++j) e[j] = euler_number(j);
  std::lock_guard lock(g_poly_mutex);
  while (g_euler_poly.size() <= n) {
    // E_d(t) = sum_j C(d, j) E_j / 2^j (t - 1/2)^{d-j}
    const unsigned d = static_cast<unsigned>(g_euler_poly.size());
    RationalPolynomial acc;
    RationalPolynomial power{1};
    const RationalPolynomial centered{ExactRational(-1, 2), 1};
    for (unsigned j = d + 1; j-- > 0;) {
      if (e[j] != 0) {
        ExactRational c(binomial(d, j) * e[j], pow(BigInt(2), j));
        c.canonicalize();
        acc += power * c;
      }
      power = power * centered;
    }
    g_euler_poly.push_back(std::move(acc));
  }
  return g_euler_poly[n];
}

namespace {

std::vector<ExactRational> powers(unsigned n, const ExactRational& t) {
  std::vector<ExactRational> p(n + 1);
  p[0] = 1;
  for (unsigned i = 1; i <= n; ++i) p[i] = p[i - 1] * t;
  return p;
}

std::vector<ExactRational> evaluate_family(unsigned n, const ExactRational& t, const RationalPolynomial& (*family)(unsigned)) {
  family(n);
  const auto p = powers(n, t);
  std::vector<ExactRational> out(n + 1);
  for (unsigned d = 0; d <= n; ++d) {
    const auto& c = family(d).coefficients();
    ExactRational acc = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] != 0) acc += c[i] * p[i];
    }
    out[d] = acc;
  }
  return out;
}

}  // namespace

std::vector<ExactRational> bernoulli_values(unsigned n, const ExactRational& t) { return evaluate_family(n, t, &bernoulli_polynomial); }

std::vector<ExactRational> euler_values(unsigned n, const ExactRational& t) { return evaluate_family(n, t, &euler_polynomial); }

StirlingTable::StirlingTable(unsigned max_k) : max_k_(max_k), rows_(max_k + 1) {
  rows_[0] = {BigInt(1)};
  for (unsigned k = 1; k <= max_k; ++k) {
    auto& row = rows_[k];
    const auto& prev = rows_[k - 1];
    row.assign(k + 1, BigInt(0));
    for (unsigned l = 1; l <= k; ++l) {
      BigInt v = prev[l - 1];
      if (l <= k - 1) v -= BigInt(k - 1) * prev[l];
      row[l] = std::move(v);
    }
  }
}

const BigInt& StirlingTable::at(long k, long l) const {
  if (k < 0 || l < 0 || l > k || k > static_cast<long>(max_k_))
    throw RangeError("Stirling index (" + std::to_string(k) + ", " + std::to_string(l) + ") outside table of size " + std::to_string(max_k_));
  return rows_[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

const BigInt& stirling_first(const StirlingTable& table, long k, long l) { return table.at(k, l); }

std::shared_ptr<const StirlingTable> stirling_table(unsigned max_k) {
  std::lock_guard lock(g_stirling_mutex);
  if (!g_stirling || g_stirling->max_k() < max_k) {
    unsigned size = g_stirling ? g_stirling->max_k() : 64;
    while (size < max_k) size *= 2;
    g_stirling = std::make_shared<const StirlingTable>(size);
  }
  return g_stirling;
}

BigReal pochhammer(const BigReal& x, unsigned k) {
  PochhammerStepper s(x);
  for (unsigned i = 0; i < k; ++i) s.advance();
  return s.value();
}

ExactRational pochhammer(const ExactRational& x, unsigned k) {
  ExactRational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= x + i;
  return r;
}

ExactRational double_factorial_odd(long n) {
  if (n % 2 == 0) throw DomainError("double_factorial_odd needs an odd argument, got " + std::to_string(n));
  ExactRational r = 1;
  if (n > 0) {
    for (long i = n; i > 1; i -= 2) r *= i;
  } else {
    // n!! = (n+2)!!/(n+2), walking down from (-1)!! = 1.
    for (long i = -1; i > n; i -= 2) r /= i;
  }
  return r;
}

ExactRational generalized_binomial(const ExactRational& m, unsigned l) {
  ExactRational r = 1;
  for (unsigned i = 0; i < l; ++i) r *= (m - i) / (i + 1);
  return r;
}

BigReal generalized_binomial(const BigReal& m, unsigned l) {
  BigReal r(1L, m.precision());
  for (unsigned i = 0; i < l; ++i) {
    r *= m - ExactRational(i);
    r /= static_cast<long>(i + 1);
  }
  return r;
}

ComplexRational generalized_binomial(const ComplexRational& m, unsigned l) {
  ComplexRational r{1, 0};
  for (unsigned i = 0; i < l; ++i) r = r * ComplexRational{m.re - i, m.im} / ExactRational(i + 1);
  return r;
}

}  // namespace stirsum

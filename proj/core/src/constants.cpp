// SPDX-License-Identifier: Apache-2.0
#include "stirsum/constants.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "stirsum/combinatorics.hpp"
#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

constexpr Precision kGuardBits = 32;

long direct_terms(Precision bits, double abs_s) { return bits / 4 + static_cast<long>(std::ceil(abs_s)) + 10; }

Precision cancellation_bits(long n, double s) {
  const double growth = (1.0 + std::max(0.0, -s)) * std::log2(static_cast<double>(n));
  return static_cast<Precision>(std::ceil(growth)) + 8;
}

bool is_trivial_zero(const BigReal& s) {
  if (!s.is_integer() || !(s < 0)) return false;
  return mpfr_get_si(s.get(), MPFR_RNDN) % 2 == 0;
}

void check_precision(Precision bits) {
  if (bits < kMinPrecision) throw ParameterError("precision_bits must be at least 64");
}

// B_{2j}/(2j)! for j >= 1.
ExactRational bernoulli_over_factorial(unsigned two_j) { return bernoulli_number(two_j) / ExactRational(factorial(two_j)); }

}  // namespace

BigReal zeta_em(const BigReal& s_in, Precision precision_bits) {
  check_precision(precision_bits);
  if (s_in == BigReal(1L, s_in.precision())) throw PoleError("zeta has a pole at s = 1");
  if (is_trivial_zero(s_in)) return BigReal(precision_bits);

  const double sd = s_in.to_double();
  const long n = direct_terms(precision_bits, std::fabs(sd));
  const Precision work = precision_bits + kGuardBits + cancellation_bits(n, sd);
  const BigReal s = s_in.at_precision(work);
  const BigReal one(1L, work);

  BigReal sum(work);
  BigReal kk(work);
  for (long k = 1; k < n; ++k) {
    mpfr_ui_pow(kk.get(), static_cast<unsigned long>(k), (-s).get(), MPFR_RNDN);
    sum += kk;
  }
  const BigReal nn(n, work);
  const BigReal n_pow = pow(nn, -s);
  sum += n_pow * nn / (s - one);
  sum += n_pow / 2L;

  // P_j = (s)_{2j-1} N^{-s-2j+1}
  BigReal p = s * n_pow / nn;
  const BigReal n2 = nn * nn;
  const BigReal eps = exp2(-work, work);
  for (unsigned j = 1;; ++j) {
    BigReal term = p * bernoulli_over_factorial(2 * j);
    if (term.is_zero()) break;
    const BigReal mag = abs(term);
    if (j > 3 * static_cast<unsigned>(n)) throw QuadratureError("zeta_em correction series did not settle");
    sum += term;
    if (mag < eps * abs(sum)) break;
    p *= (s + ExactRational(2 * j - 1)) * (s + ExactRational(2 * j));
    p /= n2;
  }
  return sum.at_precision(precision_bits);
}

ComplexReal zeta_em(const ComplexReal& s_in, Precision precision_bits) {
  check_precision(precision_bits);
  if (s_in.im().is_zero()) return ComplexReal(zeta_em(s_in.re(), precision_bits), BigReal(precision_bits));

  const double sre = s_in.re().to_double();
  const double sabs = std::hypot(sre, s_in.im().to_double());
  const long n = direct_terms(precision_bits, sabs);
  const Precision work = precision_bits + kGuardBits + cancellation_bits(n, sre);
  const ComplexReal s(s_in.re().at_precision(work), s_in.im().at_precision(work));
  const ComplexReal one(BigReal(1L, work), BigReal(work));

  ComplexReal sum(work);
  for (long k = 1; k < n; ++k) sum += pow(BigReal(k, work), -s);
  const BigReal nn(n, work);
  const ComplexReal n_pow = pow(nn, -s);
  sum += n_pow * nn / (s - one);
  {
    ComplexReal half = n_pow;
    half *= BigReal(ExactRational(1, 2), work);
    sum += half;
  }

  ComplexReal p = s * n_pow;
  p *= BigReal(1L, work) / nn;
  const BigReal inv_n2 = BigReal(1L, work) / (nn * nn);
  const BigReal eps = exp2(-work, work);
  for (unsigned j = 1;; ++j) {
    ComplexReal term = p * BigReal(bernoulli_over_factorial(2 * j), work);
    const BigReal mag = term.abs();
    if (mag.is_zero()) break;
    if (j > 3 * static_cast<unsigned>(n)) throw QuadratureError("zeta_em correction series did not settle");
    sum += term;
    if (mag < eps * sum.abs()) break;
    const ComplexReal a = s + ComplexReal(BigReal(static_cast<long>(2 * j - 1), work), BigReal(work));
    const ComplexReal b = s + ComplexReal(BigReal(static_cast<long>(2 * j), work), BigReal(work));
    p = p * a * b;
    p *= inv_n2;
  }
  return ComplexReal(sum.re().at_precision(precision_bits), sum.im().at_precision(precision_bits));
}

BigReal eta(const BigReal& s, Precision precision_bits) {
  check_precision(precision_bits);
  const Precision work = precision_bits + kGuardBits;
  if (s == BigReal(1L, s.precision())) return log_two(work).at_precision(precision_bits);
  const BigReal two(2L, work);
  const BigReal factor = BigReal(1L, work) - pow(two, BigReal(1L, work) - s.at_precision(work));
  return (factor * zeta_em(s, work)).at_precision(precision_bits);
}

ComplexReal eta(const ComplexReal& s, Precision precision_bits) {
  check_precision(precision_bits);
  if (s.im().is_zero()) return ComplexReal(eta(s.re(), precision_bits), BigReal(precision_bits));
  const Precision work = precision_bits + kGuardBits;
  const ComplexReal one(BigReal(1L, work), BigReal(work));
  const ComplexReal sw(s.re().at_precision(work), s.im().at_precision(work));
  const ComplexReal factor = one - pow(BigReal(2L, work), one - sw);
  const ComplexReal r = factor * zeta_em(sw, work);
  return ComplexReal(r.re().at_precision(precision_bits), r.im().at_precision(precision_bits));
}

BigReal euler_gamma(Precision precision_bits) {
  check_precision(precision_bits);
  const long n = direct_terms(precision_bits, 0);
  const Precision work = precision_bits + kGuardBits;
  ExactRational harmonic = 0;
  for (long k = 1; k < n; ++k) harmonic += ExactRational(1, k);
  BigReal sum(harmonic, work);
  const BigReal nn(n, work);
  sum += ExactRational(1, 2 * n);
  sum -= log(nn);
  const BigReal eps = exp2(-work, work);
  const BigReal inv_n2 = BigReal(1L, work) / (nn * nn);
  BigReal power = inv_n2;
  for (unsigned j = 1;; ++j) {
    BigReal term = power * (bernoulli_number(2 * j) / ExactRational(2 * j));
    sum += term;
    if (abs(term) < eps) break;
    power *= inv_n2;
  }
  return sum.at_precision(precision_bits);
}

BigReal stieltjes_1(Precision precision_bits) {
  check_precision(precision_bits);
  const long n = direct_terms(precision_bits, 0);
  const Precision work = precision_bits + kGuardBits;
  BigReal sum(work);
  for (long k = 2; k < n; ++k) sum += log(BigReal(k, work)) / k;
  const BigReal nn(n, work);
  const BigReal log_n = log(nn);
  sum += log_n / (2 * n);
  sum -= log_n * log_n / 2L;
  // f(x) = log x / x has f^(r)(x) = (-1)^r r! (log x - H_r) / x^(r+1).
  const BigReal eps = exp2(-work, work);
  const BigReal inv_n2 = BigReal(1L, work) / (nn * nn);
  BigReal power = inv_n2;
  ExactRational h = 1;  // H_{2j-1}
  for (unsigned j = 1;; ++j) {
    BigReal term = (log_n - BigReal(h, work)) * power * (bernoulli_number(2 * j) / ExactRational(2 * j));
    sum += term;
    if (abs(term) < eps) break;
    power *= inv_n2;
    h += ExactRational(1, 2 * j) + ExactRational(1, 2 * j + 1);
  }
  return sum.at_precision(precision_bits);
}

namespace {

BigReal zeta_prime(const BigReal& s, Precision precision_bits) {
  if (s == BigReal(1L, s.precision())) throw PoleError("zeta' has a pole at s = 1");
  const Precision work = 2 * precision_bits + 64;
  const BigReal h = exp2(-(precision_bits / 2 + 8), work);
  const BigReal sw = s.at_precision(work);
  BigReal d = zeta_em(sw + h, work) - zeta_em(sw - h, work);
  d /= 2L * h;
  return d.at_precision(precision_bits);
}

BigReal compute(const ConstantRequest& req) {
  const Precision p = req.precision_bits;
  auto param = [&]() -> BigReal {
    if (!req.parameter) throw ParameterError("constant " + constant_name(req) + " needs a parameter");
    return BigReal(*req.parameter, p + kGuardBits);
  };
  switch (req.id) {
    case ConstantId::zeta:
      return zeta_em(param(), p);
    case ConstantId::zeta_prime:
      return zeta_prime(param(), p);
    case ConstantId::eta:
      return eta(param(), p);
    case ConstantId::euler_gamma:
      return euler_gamma(p);
    case ConstantId::stieltjes_1:
      return stieltjes_1(p);
    case ConstantId::pi:
      return pi(p);
    case ConstantId::log_two_pi:
      return log(2L * pi(p + kGuardBits)).at_precision(p);
    case ConstantId::log_two:
      return log_two(p);
  }
  throw UnknownConstantError("unsupported constant id");
}

std::mutex g_cache_mutex;
std::map<std::pair<std::string, Precision>, BigReal> g_cache;

const std::pair<ConstantId, const char*> kNames[] = {
    {ConstantId::zeta, "zeta"},           {ConstantId::zeta_prime, "zeta_prime"},   {ConstantId::eta, "eta"},
    {ConstantId::euler_gamma, "euler_gamma"}, {ConstantId::stieltjes_1, "stieltjes_1"}, {ConstantId::pi, "pi"},
    {ConstantId::log_two_pi, "log_two_pi"},   {ConstantId::log_two, "log_two"},
};

bool takes_parameter(ConstantId id) { return id == ConstantId::zeta || id == ConstantId::zeta_prime || id == ConstantId::eta; }

}  // namespace

std::string constant_name(const ConstantRequest& req) {
  std::string base;
  for (const auto& [id, name] : kNames) {
    if (id == req.id) base = name;
  }
  if (base.empty()) throw UnknownConstantError("unsupported constant id");
  if (takes_parameter(req.id)) base += "(" + (req.parameter ? req.parameter->get_str() : std::string("?")) + ")";
  return base;
}

ConstantRequest parse_constant(const std::string& name, Precision precision_bits) {
  const auto open = name.find('(');
  const std::string head = name.substr(0, open);
  for (const auto& [id, label] : kNames) {
    if (head != label) continue;
    ConstantRequest req{id, std::nullopt, precision_bits};
    if (takes_parameter(id)) {
      if (open == std::string::npos || name.back() != ')') throw UnknownConstantError("constant '" + name + "' needs an argument, e.g. zeta(3/2)");
      req.parameter = parse_rational(name.substr(open + 1, name.size() - open - 2));
    } else if (open != std::string::npos) {
      throw UnknownConstantError("constant '" + head + "' takes no argument");
    }
    return req;
  }
  throw UnknownConstantError("unknown constant '" + name + "'");
}

BigReal get_constant(const ConstantRequest& req) {
  check_precision(req.precision_bits);
  const auto key = std::make_pair(constant_name(req), req.precision_bits);
  {
    std::lock_guard lock(g_cache_mutex);
    if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  }
  BigReal value = compute(req);
  std::lock_guard lock(g_cache_mutex);
  return g_cache.emplace(key, std::move(value)).first->second;
}

std::vector<ConstantRequest> catalog_constants(Precision precision_bits) {
  std::vector<ConstantRequest> out;
  for (ConstantId id : {ConstantId::euler_gamma, ConstantId::stieltjes_1, ConstantId::pi, ConstantId::log_two, ConstantId::log_two_pi})
    out.push_back({id, std::nullopt, precision_bits});
  for (const char* s : {"1/2", "3/2", "2", "5/2", "3", "7/2"}) out.push_back({ConstantId::zeta, parse_rational(s), precision_bits});
  for (const char* s : {"-1", "2"}) out.push_back({ConstantId::zeta_prime, parse_rational(s), precision_bits});
  for (const char* s : {"-1", "1/2", "1"}) out.push_back({ConstantId::eta, parse_rational(s), precision_bits});
  return out;
}

}  // namespace stirsum

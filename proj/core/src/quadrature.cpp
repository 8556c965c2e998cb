// SPDX-License-Identifier: Apache-2.0
#include "stirsum/quadrature.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

struct Rule {
  std::vector<BigReal> nodes;  // on [-1, 1]
  std::vector<BigReal> weights;
};

// Legendre nodes by Newton iteration on P_n.
Rule make_rule(unsigned n, Precision bits) {
  Rule rule;
  const BigReal pi_v = pi(bits);
  const BigReal eps = exp2(-(bits - 4), bits);
  for (unsigned i = 1; i <= n; ++i) {
    BigReal z = cos(pi_v * ExactRational(4 * i - 1, 4 * n + 2));
    BigReal dp(bits);
    for (int iter = 0; iter < 100; ++iter) {
      BigReal p0(1L, bits);
      BigReal p1 = z;
      for (unsigned k = 2; k <= n; ++k) {
        BigReal p2 = (z * p1 * static_cast<long>(2 * k - 1) - p0 * static_cast<long>(k - 1)) / static_cast<long>(k);
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      dp = (z * p1 - p0) * static_cast<long>(n) / (z * z - ExactRational(1));
      BigReal step = p1 / dp;
      z -= step;
      if (abs(step) < eps) break;
    }
    BigReal w = BigReal(2L, bits) / ((BigReal(1L, bits) - z * z) * dp * dp);
    rule.nodes.push_back(std::move(z));
    rule.weights.push_back(std::move(w));
  }
  return rule;
}

std::mutex g_rule_mutex;
std::map<std::pair<unsigned, Precision>, std::shared_ptr<const Rule>> g_rules;

std::shared_ptr<const Rule> rule_for(unsigned n, Precision bits) {
  std::lock_guard lock(g_rule_mutex);
  auto& slot = g_rules[{n, bits}];
  if (!slot) slot = std::make_shared<const Rule>(make_rule(n, bits + 16));
  return slot;
}

BigReal apply(const Rule& rule, const RealFunction& f, const BigReal& a, const BigReal& b) {
  const Precision bits = a.precision();
  const BigReal half = (b - a) / 2L;
  const BigReal mid = (a + b) / 2L;
  BigReal acc(bits);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i].at_precision(bits));
  return acc * half;
}

BigReal adapt(const RealFunction& f, const BigReal& a, const BigReal& b, const BigReal& tol, unsigned depth, const QuadratureOptions& options,
              const Rule& coarse, const Rule& fine) {
  BigReal lo = apply(coarse, f, a, b);
  BigReal hi = apply(fine, f, a, b);
  if (!(abs(hi - lo) > tol)) return hi;
  if (depth >= options.max_depth) throw QuadratureError("adaptive quadrature did not reach tolerance " + tol.to_string(3));
  const BigReal mid = (a + b) / 2L;
  const BigReal half_tol = tol / 2L;
  return adapt(f, a, mid, half_tol, depth + 1, options, coarse, fine) + adapt(f, mid, b, half_tol, depth + 1, options, coarse, fine);
}

}  // namespace

BigReal integrate(const RealFunction& f, const BigReal& a, const BigReal& b, const QuadratureOptions& options) {
  const Precision bits = a.precision();
  if (a == b) return BigReal(bits);
  const auto coarse = rule_for(24, bits);
  const auto fine = rule_for(48, bits);
  return adapt(f, a, b.at_precision(bits), options.tolerance.at_precision(bits), 0, options, *coarse, *fine);
}

BigReal integrate_piecewise(const RealFunction& f, const BigReal& a, const BigReal& b, const QuadratureOptions& options) {
  const Precision bits = a.precision();
  if (b < a) return -integrate_piecewise(f, b.at_precision(bits), a, options);
  std::vector<BigReal> cuts{a};
  BigReal k = floor(a) + ExactRational(1);
  while (k < b) {
    cuts.push_back(k);
    k += ExactRational(1);
  }
  cuts.push_back(b.at_precision(bits));
  QuadratureOptions panel = options;
  panel.tolerance = options.tolerance / static_cast<long>(cuts.size() - 1);
  BigReal acc(bits);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) acc += integrate(f, cuts[i], cuts[i + 1], panel);
  return acc;
}

}  // namespace stirsum

// SPDX-License-Identifier: Apache-2.0
#include <map>

#include "reference_values.hpp"
#include "test_support.hpp"

namespace stirsum {
namespace {

using testing::Near;
using testing::Q;
using testing::R;
using testing::request;

RationalPolynomial poly(std::initializer_list<ExactRational> high_first) {
  std::vector<ExactRational> c(high_first);
  std::reverse(c.begin(), c.end());
  return RationalPolynomial(c);
}

TEST(NumeratorPolynomial, SqrtDisplays) {
  const FormulaId id = parse_formula_id("sqrt.v1");
  EXPECT_EQ(numerator_polynomial(id, 1), poly({Q(1, 4), Q(-1, 4), Q(1, 24)}));
  EXPECT_EQ(numerator_polynomial(id, 2), poly({Q(1, 24), Q(3, 16), Q(-11, 48), Q(1, 24)}));
  EXPECT_EQ(numerator_polynomial(id, 3), poly({Q(1, 64), Q(3, 32), Q(21, 64), Q(-7, 16), Q(53, 640)}));
  EXPECT_EQ(numerator_polynomial(id, 4), poly({Q(1, 128), Q(19, 256), Q(109, 384), Q(29, 32), Q(-977, 768), Q(79, 320)}));
  // sympy re-expansion of the Euler-Maclaurin tail of sqrt
  EXPECT_EQ(numerator_polynomial(id, 5), poly({Q(7, 1536), Q(33, 512), Q(1115, 3072), Q(215, 192), Q(10505, 3072), Q(-1909, 384), Q(9049, 9216)}));
  EXPECT_EQ(numerator_polynomial(id, 4)(Q(0)), Q(79, 320));
  EXPECT_THROW(numerator_polynomial(id, 0), ParameterError);
}

TEST(NumeratorPolynomial, IntegerOnlyVariantsAreConstant) {
  for (const auto& e : list_formulas()) {
    if (!e.integer_x_only || e.finite || e.slow) continue;
    try {
      EXPECT_LE(numerator_polynomial(e.id, 3, default_params(e.id)).degree(), 0) << to_string(e.id);
    } catch (const CapabilityError&) {
    }
  }
}

TEST(NumeratorPolynomial, UnsupportedFamilies) {
  EXPECT_THROW(numerator_polynomial(parse_formula_id("geometric_stirling.v1"), 2, default_params(parse_formula_id("geometric_stirling.v1"))),
               CapabilityError);
}

TEST(FaulhaberInnerSum, SpecValues) {
  const ComplexRational a = faulhaber_inner_sum({Q(2), Q(0)}, 1, 1, Q(0));
  EXPECT_EQ(a.re, Q(1, 2));
  EXPECT_EQ(a.im, Q(0));
  for (unsigned k = 1; k <= 8; ++k) EXPECT_EQ(faulhaber_inner_sum({Q(0), Q(0)}, k, 1, Q(0)).re, Q(0)) << k;
  EXPECT_EQ(faulhaber_inner_sum({Q(1, 2), Q(0)}, 1, 0, Q(0)).re, Q(-3, 4));
}

TEST(LogFamilies, Weights) {
  EXPECT_EQ(log_weight(1), Q(1));
  EXPECT_EQ(log_weight(3), Q(13, 3));
  EXPECT_EQ(stirling_first(*stirling_table(3), 2, 2), 1);
  EXPECT_EQ(stirling_first(*stirling_table(3), 3, 2), -3);
}

TEST(LogFamilies, InnerSumOverloadsAgree) {
  const FormulaId id = parse_formula_id("logk_over_k.v1");
  const BigReal lx = log(R("3.7", 192));
  for (unsigned k = 1; k <= 6; ++k) {
    const LogInnerSum s = log_family_inner_sum(id, k, Q(7, 10));
    EXPECT_TRUE(Near(log_family_inner_sum(id, k, Q(7, 10), lx), R(s.log_free, 192) + lx * s.log_coefficient, "1e-50"));
  }
}

TEST(Catalog, Listing) {
  const auto& all = list_formulas();
  std::map<Family, unsigned> counts;
  for (const auto& e : all) ++counts[e.id.family];
  EXPECT_EQ(counts[Family::sqrt], 3u);
  EXPECT_EQ(counts[Family::zeta3], 2u);
  EXPECT_EQ(counts[Family::faulhaber_ext], 3u);
  EXPECT_EQ(counts[Family::geometric_em] + counts[Family::alt_geometric_em], 2u);
  EXPECT_EQ(all.front().id, (FormulaId{Family::harmonic, 1}));
  EXPECT_EQ(all.size(), all_formula_ids().size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    EXPECT_EQ(all[i].id, all_formula_ids()[i]);
    EXPECT_EQ(catalog_entry(all[i].id).id, all[i].id);
    EXPECT_FALSE(all[i].description.empty());
    EXPECT_EQ(all[i].slow, is_slow(all[i].id.family));
  }
}

TEST(FormulaId, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_formula_id("faulhaber_ext.v3")), "faulhaber_ext.v3");
  EXPECT_THROW(parse_formula_id("zeta3.v3"), ParameterError);
  EXPECT_THROW(parse_formula_id("zeta3"), ParameterError);
  EXPECT_THROW(parse_formula_id("bogus.v1"), ParameterError);
  EXPECT_THROW(parse_formula_id("sqrt.v0"), ParameterError);
}

TEST(Evaluate, HarmonicReference) {
  const auto res = evaluate(request("harmonic.v2", "10.5"));
  EXPECT_TRUE(Near(res.value, R(Q(7381, 2520), 192), "1e-25")) << to_string(res.status) << " orders " << res.orders_used;
}

TEST(Evaluate, ExactFamilies) {
  const auto sc = evaluate(request("self_counting.v1", "10"));
  EXPECT_EQ(sc.value, R("30", 192));
  EXPECT_TRUE(sc.error_estimate.is_zero());
  EXPECT_EQ(sc.orders_used, 0u);

  auto req = request("alt_faulhaber_finite.v1", "5");
  req.params.m = ComplexRational{Q(1), Q(0)};
  const auto af = evaluate(req);
  EXPECT_EQ(af.value, R("3", 192));
  EXPECT_TRUE(af.error_estimate.is_zero());

  // eta(0) = 1/2 carries the B_1 sign
  req.params.m = ComplexRational{Q(0), Q(0)};
  for (long n = 1; n <= 4; ++n) {
    req.x = Q(n);
    EXPECT_EQ(evaluate(req).value, R(n % 2 ? "1" : "0", 192)) << n;
  }
}

TEST(Evaluate, GregoryLeibnizAtInteger) {
  ExactRational direct = 0;
  for (long k = 0; k <= 10; ++k) direct += Q(k % 2 ? -1 : 1, 2 * k + 1);
  for (const char* id : {"gregory_leibniz.v1", "gregory_leibniz.v2"}) {
    const auto res = evaluate(request(id, "10"));
    EXPECT_TRUE(Near(res.value, R(direct, 192), "1e-25")) << id << " " << to_string(res.status);
  }
}

TEST(Evaluate, AgainstMpmathSums) {
  for (const auto& ref : testing::kDirectSums) {
    const std::string id = std::string(ref.family) + ".v1";
    const auto res = evaluate(request(id, ref.x, 192, "1e-30", 256));
    // algebraic tail: up to a few K first-omitted terms
    const BigReal tol = max(res.error_estimate * static_cast<long>(4 * res.orders_used), R("1e-40", 192));
    EXPECT_TRUE(Near(res.value, R(ref.value, 192), tol)) << id << " at " << ref.x;
  }
}

TEST(Evaluate, ComplexExponent) {
  for (const char* id : {"faulhaber_ext.v1", "faulhaber_ext.v2"}) {
    auto req = request(id, "10.5", 192, "1e-30", 128);
    req.params.m = parse_complex("0.5+2i");
    const auto res = evaluate(req);
    ASSERT_TRUE(res.imag.has_value()) << id;
    EXPECT_TRUE(Near(res.value, R(testing::kComplexPowerSumRe, 192), "1e-8")) << id;
    EXPECT_TRUE(Near(*res.imag, R(testing::kComplexPowerSumIm, 192), "1e-8")) << id;
  }
}

TEST(Evaluate, FaulhaberIntegerExponent) {
  const auto closed = [](long m, long n) -> ExactRational {
    switch (m) {
      case 0: return Q(n);
      case 1: return Q(n * (n + 1), 2);
      case 2: return Q(n * (n + 1) * (2 * n + 1), 6);
      case 3: return Q(n * n * (n + 1) * (n + 1), 4);
      default: return Q(n * (n + 1) * (2 * n + 1) * (3 * n * n + 3 * n - 1), 30);
    }
  };
  for (long m = 0; m <= 4; ++m) {
    for (long n : {5L, 17L}) {
      auto req = request("faulhaber_ext.v1", std::to_string(n).c_str());
      req.params.m = ComplexRational{Q(m), Q(0)};
      EXPECT_TRUE(Near(evaluate(req).value, R(closed(m, n), 192), "1e-25")) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Evaluate, VariantAgreement) {
  std::map<Family, BigReal> first;
  for (const auto& e : list_formulas()) {
    if (e.slow || e.integer_x_only || variant_count(e.id.family) < 2) continue;
    const BigReal v = evaluate(request(to_string(e.id), "25")).value;
    auto [it, inserted] = first.emplace(e.id.family, v);
    if (!inserted) EXPECT_TRUE(Near(v, it->second, "1e-20")) << to_string(e.id);
  }
}

TEST(Evaluate, IntegerRealConsistency) {
  const ExactRational eps = pow(Q(1, 2), 40);
  for (const char* id : {"harmonic.v1", "sqrt.v2", "alt_harmonic.v1", "log_squared.v1", "zeta3.v2"}) {
    auto at = [&](const ExactRational& x) {
      auto req = request(id, "1");
      req.x = x;
      return evaluate(req).value;
    };
    const BigReal below = at(Q(26) - eps);
    EXPECT_TRUE(Near(below, at(Q(25)), "1e-15")) << id;
    const FormulaId fid = parse_formula_id(id);
    const BigReal step = brute_force(fid.family, Q(26), {}, 192).value - brute_force(fid.family, Q(25), {}, 192).value;
    EXPECT_TRUE(Near(at(Q(26)) - below, step, "1e-15")) << id;
  }
}

TEST(Evaluate, ParameterErrors) {
  EXPECT_THROW(evaluate(request("sqrt.v1", "0")), ParameterError);
  EXPECT_THROW(evaluate(request("sqrt.v1", "-2")), ParameterError);
  auto a1 = request("geometric_stirling.v1", "7.3");
  a1.params.a = Q(1);
  EXPECT_THROW(evaluate(a1), ParameterError);
  auto aneg = request("geometric_stirling.v1", "7.3");
  aneg.params.a = Q(-2);
  EXPECT_THROW(evaluate(aneg), ParameterError);
  auto wide = request("geometric_em.v1", "7.3");
  wide.params.a = Q(1000);
  EXPECT_THROW(evaluate(wide), ParameterError);
  auto mneg = request("faulhaber_ext.v1", "7.3");
  mneg.params.m = ComplexRational{Q(-1), Q(0)};
  EXPECT_THROW(evaluate(mneg), ParameterError);
  auto cm3 = request("faulhaber_ext.v3", "7.3");
  cm3.params.m = ComplexRational{Q(1, 2), Q(1)};
  EXPECT_THROW(evaluate(cm3), ParameterError);
  auto nonint = request("alt_faulhaber_finite.v1", "7");
  nonint.params.m = ComplexRational{Q(3, 2), Q(0)};
  EXPECT_THROW(evaluate(nonint), ParameterError);
  EXPECT_THROW(evaluate(request("sqrt.v1", "7", 32)), ParameterError);
  for (const auto& e : list_formulas()) {
    if (e.integer_x_only) EXPECT_THROW(evaluate(request(to_string(e.id), "7.5")), ParameterError) << to_string(e.id);
  }
  EXPECT_THROW(evaluate(request("sqrt_fresnel.v1", "4")), CapabilityError);
}

TEST(Evaluate, ResultInvariants) {
  for (const auto& e : list_formulas()) {
    if (e.slow) continue;
    const auto res = evaluate(request(to_string(e.id), e.integer_x_only ? "10" : "10.5", 128, "1e-30", 40));
    EXPECT_LE(res.orders_used, 40u) << to_string(e.id);
    EXPECT_EQ(res.term_magnitudes.size(), res.orders_used) << to_string(e.id);
    EXPECT_GE(res.error_estimate.sign(), 0) << to_string(e.id);
    EXPECT_EQ(res.value.precision(), 128) << to_string(e.id);
  }
}

TEST(Evaluate, Deterministic) {
  const auto a = evaluate(request("k2_sqrt.v2", "3.7"));
  const auto b = evaluate(request("k2_sqrt.v2", "3.7"));
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.orders_used, b.orders_used);
}

}  // namespace
}  // namespace stirsum

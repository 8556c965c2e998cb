// SPDX-License-Identifier: Apache-2.0
#include "reference_values.hpp"
#include "test_support.hpp"

namespace stirsum {
namespace {

using testing::Near;
using testing::Q;
using testing::R;

constexpr Precision kBits = 192;

TEST(FresnelS, ReferenceGrid) {
  for (const auto& p : testing::kSpecialGrid) {
    const BigReal z = R(p.z, kBits);
    const BigReal expected = R(p.fresnel_s, kBits);
    EXPECT_TRUE(Near(fresnel_s(z, kBits), expected, max(abs(expected), R("1", kBits)) * R("1e-42", kBits))) << p.z;
  }
}

TEST(CosIntegral, ReferenceGrid) {
  for (const auto& p : testing::kSpecialGrid) {
    const BigReal z = R(p.z, kBits);
    const BigReal expected = R(p.cos_integral, kBits);
    EXPECT_TRUE(Near(cos_integral(z, kBits), expected, max(abs(expected), R("1", kBits)) * R("1e-42", kBits))) << p.z;
  }
}

TEST(FresnelS, KnownValues) {
  EXPECT_TRUE(fresnel_s(R("0", kBits), kBits).is_zero());
  EXPECT_TRUE(Near(fresnel_s(R("100", kBits), kBits), R("0.5", kBits), "0.01"));
  EXPECT_TRUE(Near(fresnel_s(R("1", kBits), kBits), R("0.4382591473903548", kBits), "1e-15"));
  EXPECT_EQ(fresnel_s(R("-2.5", kBits), kBits), -fresnel_s(R("2.5", kBits), kBits));
}

TEST(CosIntegral, KnownValues) {
  EXPECT_TRUE(abs(cos_integral(R("1000", kBits), kBits)) < R("0.001", kBits));
  EXPECT_TRUE(Near(cos_integral(R("1", kBits), kBits), R("0.3374039229009681", kBits), "1e-15"));
  const BigReal z = R("1e-6", kBits);
  EXPECT_TRUE(Near(cos_integral(z, kBits) - log(z), euler_gamma(kBits), "1e-12"));
  EXPECT_THROW(cos_integral(R("0", kBits), kBits), DomainError);
  EXPECT_THROW(cos_integral(R("-1", kBits), kBits), DomainError);
}

TEST(SwitchPoints, BranchesAgree) {
  for (Precision bits : {128L, 192L, 320L}) {
    const BigReal fs = fresnel_switch(bits);
    const BigReal delta = exp2(-30, bits);
    EXPECT_TRUE(Near(fresnel_s(fs - delta, bits), fresnel_s(fs + delta, bits), exp2(-29, bits))) << bits;
    const BigReal cs = cos_integral_switch(bits);
    EXPECT_TRUE(Near(cos_integral(cs - delta, bits), cos_integral(cs + delta, bits), exp2(-29, bits))) << bits;
    EXPECT_TRUE(fs > 7L);
    EXPECT_TRUE(cs > 19L);
  }
}

TEST(EvaluateSlow, FresnelFormula) {
  const auto res = evaluate_slow({Family::sqrt_fresnel, Q(4), 2000, 128});
  const BigReal expected = R("3", 128) + sqrt(R("2", 128)) + sqrt(R("3", 128));
  EXPECT_TRUE(Near(res.value, expected, slow_tail_bound(Family::sqrt_fresnel, Q(4), 2000)));
  EXPECT_EQ(res.orders_used, 2000u);
  EXPECT_EQ(res.status, TruncationStatus::converged);
}

TEST(EvaluateSlow, CosIntegralFormula) {
  const auto res = evaluate_slow({Family::harmonic_cosint, Q(7, 2), 5000, 128});
  EXPECT_TRUE(Near(res.value, R(Q(11, 6), 128), slow_tail_bound(Family::harmonic_cosint, Q(7, 2), 5000)));
}

TEST(EvaluateSlow, SingleTerm) {
  const auto one = evaluate_slow({Family::harmonic_cosint, Q(7, 2), 1, 128});
  EXPECT_EQ(one.term_magnitudes.size(), 1u);
  const BigReal x = R("3.5", 128);
  const BigReal closed = log(x) + euler_gamma(128);
  const BigReal term = cos_integral(2L * pi(128) * x, 128) * 2L;
  EXPECT_TRUE(Near(one.value, closed + term, "1e-35"));
  EXPECT_TRUE(Near(one.term_magnitudes[0], abs(term), "1e-35"));
}

TEST(EvaluateSlow, Errors) {
  EXPECT_THROW(evaluate_slow({Family::harmonic, Q(3), 10, 128}), ParameterError);
  EXPECT_THROW(evaluate_slow({Family::sqrt_fresnel, Q(3), 0, 128}), ParameterError);
  EXPECT_THROW(evaluate_slow({Family::sqrt_fresnel, Q(0), 10, 128}), ParameterError);
}

}  // namespace
}  // namespace stirsum

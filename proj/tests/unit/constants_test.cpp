// SPDX-License-Identifier: Apache-2.0
#include "reference_values.hpp"
#include "test_support.hpp"

namespace stirsum {
namespace {

using testing::Near;
using testing::Q;
using testing::R;

BigReal c(ConstantId id, Precision bits = 256) { return get_constant({id, std::nullopt, bits}); }
BigReal c(ConstantId id, const ExactRational& s, Precision bits = 256) { return get_constant({id, s, bits}); }

TEST(Constants, AgainstReferenceValues) {
  for (const auto& ref : testing::kConstants) {
    const ConstantRequest req = parse_constant(ref.name, 256);
    EXPECT_TRUE(Near(get_constant(req), R(ref.value), "1e-55")) << ref.name;
  }
}

TEST(Constants, KnownValues) {
  EXPECT_TRUE(Near(c(ConstantId::eta, Q(-1)), R(Q(1, 4)), "1e-70"));
  EXPECT_TRUE(Near(c(ConstantId::zeta, Q(-2)), R("0"), "1e-70"));
  EXPECT_TRUE(Near(c(ConstantId::euler_gamma), R("0.57721566490153286060651209008240243104215933593992"), "1e-50"));
}

TEST(Constants, ZetaEm) {
  const BigReal p = pi(256);
  EXPECT_TRUE(Near(zeta_em(R("2"), 256), p * p / 6L, "1e-50"));
  EXPECT_TRUE(Near(zeta_em(R("-1"), 256), R(Q(-1, 12)), exp2(-(256 - 8), 256)));
  EXPECT_TRUE(Near(zeta_em(R("1.5"), 256), R("2.61237534868548"), "1e-14"));
}

TEST(Constants, ZetaAtNegativeIntegers) {
  for (unsigned m = 0; m <= 8; ++m) {
    // (-1)^m B_{m+1}/(m+1); equals -B_{m+1}/(m+1) for m >= 1 and gives zeta(0) = -1/2 with B_1 = -1/2
    const ExactRational expected = (m % 2 ? -1 : 1) * bernoulli_number(m + 1) / static_cast<long>(m + 1);
    EXPECT_TRUE(Near(c(ConstantId::zeta, -Q(m)), R(expected), "1e-50")) << m;
  }
}

TEST(Constants, EtaZetaRelation) {
  for (const auto& s : {Q(1, 2), Q(3, 2), Q(2), Q(3)}) {
    const BigReal factor = R("1") - pow(R("2"), R(1 - s));
    EXPECT_TRUE(Near(c(ConstantId::eta, s), factor * c(ConstantId::zeta, s), "1e-50")) << to_string(s);
  }
}

TEST(Constants, ComplexZetaAgreesOnRealLine) {
  const ComplexReal z = zeta_em(ComplexReal(ComplexRational{Q(5, 2), Q(0)}, 192), 192);
  EXPECT_TRUE(Near(z.re(), c(ConstantId::zeta, Q(5, 2), 192), "1e-50"));
  EXPECT_TRUE(Near(z.im(), R("0", 192), "1e-50"));
}

TEST(Constants, MonotoneRefinement) {
  for (const auto id : {ConstantId::euler_gamma, ConstantId::stieltjes_1, ConstantId::log_two_pi}) {
    const BigReal lo = c(id, 128);
    const BigReal hi = c(id, 256);
    EXPECT_TRUE(Near(lo, hi, abs(hi) * exp2(-(128 - 8), 256)));
  }
  EXPECT_TRUE(Near(c(ConstantId::zeta_prime, Q(2), 128), c(ConstantId::zeta_prime, Q(2), 256), exp2(-(128 - 8), 256)));
}

TEST(Constants, PureAndCached) {
  const ConstantRequest req{ConstantId::zeta, Q(7, 2), 200};
  EXPECT_EQ(get_constant(req), get_constant(req));
  EXPECT_EQ(get_constant(req).precision(), 200);
}

TEST(Constants, Errors) {
  EXPECT_THROW(c(ConstantId::zeta, Q(1)), PoleError);
  EXPECT_THROW(c(ConstantId::zeta_prime, Q(1)), PoleError);
  EXPECT_THROW(c(ConstantId::zeta), ParameterError);
  EXPECT_THROW(c(ConstantId::pi, 32), ParameterError);
  EXPECT_THROW(parse_constant("zeta", 128), UnknownConstantError);
  EXPECT_THROW(parse_constant("catalan", 128), UnknownConstantError);
  EXPECT_THROW(parse_constant("pi(2)", 128), UnknownConstantError);
}

TEST(Constants, NamesRoundTrip) {
  for (const auto& req : catalog_constants(128)) EXPECT_EQ(constant_name(parse_constant(constant_name(req), 128)), constant_name(req));
  const auto names = [] {
    std::vector<std::string> out;
    for (const auto& req : catalog_constants(128)) out.push_back(constant_name(req));
    return out;
  }();
  for (const char* needed : {"zeta(3/2)", "stieltjes_1", "euler_gamma", "zeta_prime(-1)", "zeta_prime(2)", "log_two_pi"})
    EXPECT_NE(std::find(names.begin(), names.end(), needed), names.end()) << needed;
}

}  // namespace
}  // namespace stirsum

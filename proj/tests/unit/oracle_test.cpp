// SPDX-License-Identifier: Apache-2.0
#include "test_support.hpp"

namespace stirsum {
namespace {

using testing::Near;
using testing::Q;
using testing::R;

TEST(BruteForce, KnownValues) {
  const auto h = brute_force(Family::harmonic, Q(21, 2), {}, 192);
  ASSERT_TRUE(h.exact.has_value());
  EXPECT_EQ(*h.exact, Q(7381, 2520));
  EXPECT_EQ(h.terms, 10u);
  EXPECT_EQ(*brute_force(Family::self_counting, Q(10), {}, 192).exact, Q(30));
  EXPECT_EQ(*brute_force(Family::zeta2, Q(39, 10), {}, 192).exact, Q(49, 36));
}

TEST(BruteForce, ExactFamilies) {
  FormulaParams p;
  p.a = Q(2, 3);
  const auto g = brute_force(Family::geometric_stirling, Q(5), p, 128);
  ASSERT_TRUE(g.exact.has_value());
  EXPECT_EQ(*g.exact, (pow(Q(2, 3), 6) - 1) / (Q(2, 3) - 1));
  p = {};
  p.m = ComplexRational{Q(3), Q(0)};
  const auto f = brute_force(Family::faulhaber_ext, Q(10), p, 128);
  ASSERT_TRUE(f.exact.has_value());
  EXPECT_EQ(*f.exact, Q(3025));
  const auto gl = brute_force(Family::gregory_leibniz, Q(2), {}, 128);
  EXPECT_EQ(*gl.exact, Q(1) - Q(1, 3) + Q(1, 5));
}

TEST(BruteForce, FloatingFamilies) {
  const auto s = brute_force(Family::sqrt, Q(3), {}, 128);
  EXPECT_FALSE(s.exact.has_value());
  EXPECT_TRUE(Near(s.value, R("1", 128) + sqrt(R("2", 128)) + sqrt(R("3", 128)), "1e-37"));
  FormulaParams p;
  p.m = parse_complex("0.5+1i");
  const auto c = brute_force(Family::faulhaber_ext, Q(2), p, 128);
  ASSERT_TRUE(c.imag.has_value());
  // 1 + 2^(1/2 + i)
  const ComplexReal two = pow(R("2", 128), ComplexReal(ComplexRational{Q(1, 2), Q(1)}, 128));
  EXPECT_TRUE(Near(c.value, R("1", 128) + two.re(), "1e-37"));
  EXPECT_TRUE(Near(*c.imag, two.im(), "1e-37"));
}

TEST(BruteForce, Deterministic) {
  const auto a = brute_force(Family::log_squared, Q(1234, 10), {}, 160);
  const auto b = brute_force(Family::log_squared, Q(1234, 10), {}, 160);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(*brute_force(Family::zeta3, Q(50), {}, 160).exact, *brute_force(Family::zeta3, Q(50), {}, 160).exact);
}

TEST(BruteForce, PaddingSufficient) {
  for (const auto fam : {Family::sqrt, Family::log_factorial, Family::inv_sqrt, Family::logk_over_k2}) {
    const auto lo = brute_force(fam, Q(5000), {}, 128);
    const auto hi = brute_force(fam, Q(5000), {}, 256);
    EXPECT_TRUE(Near(lo.value, hi.value, abs(hi.value) * exp2(-126, 256))) << to_string(fam);
  }
}

TEST(BruteForce, EmptySum) {
  EXPECT_TRUE(brute_force(Family::harmonic, Q(1, 2), {}, 128).value.is_zero());
  // geometric sums start at k = 0
  FormulaParams p;
  p.a = Q(3);
  EXPECT_EQ(*brute_force(Family::geometric_stirling, Q(1, 2), p, 128).exact, Q(1));
}

TEST(ConvergenceStudy, HarmonicReference) {
  const auto rep = convergence_study(parse_formula_id("harmonic.v2"), Q(21, 2), {}, 20, 192);
  ASSERT_EQ(rep.rows.size(), 20u);
  EXPECT_TRUE(rep.rows.back().abs_error < R("1e-15", 192)) << rep.rows.back().abs_error.to_string(4);
  // strictly decreasing after the first few orders
  for (std::size_t i = 4; i < rep.rows.size(); ++i) EXPECT_TRUE(rep.rows[i].abs_error < rep.rows[i - 1].abs_error) << i;
  EXPECT_EQ(rep.oracle_value, R(Q(7381, 2520), 192));
  EXPECT_EQ(rep.oracle_cost, 10u);
}

TEST(ConvergenceStudy, SqrtIntegerDisplay) {
  const auto rep = convergence_study(parse_formula_id("sqrt.v1"), Q(100), {}, 4, 192);
  ASSERT_EQ(rep.rows.size(), 4u);
  const BigReal n = R("100", 192);
  const BigReal rn = sqrt(n);
  BigReal expected = Q(2, 3) * n * rn - get_constant({ConstantId::zeta, Q(3, 2), 192}) / (4L * pi(192)) + rn / 2L;
  const ExactRational coeff[] = {Q(1, 24), Q(1, 24), Q(53, 640), Q(79, 320)};
  for (unsigned k = 1; k <= 4; ++k) {
    expected += coeff[k - 1] * rn / pochhammer(R("101", 192), k);
    EXPECT_TRUE(Near(rep.rows[k - 1].partial_value, expected, "1e-45")) << k;
    EXPECT_EQ(rep.rows[k - 1].order, k);
  }
}

TEST(ConvergenceStudy, Rows) {
  const auto one = convergence_study(parse_formula_id("zeta2.v1"), Q(37, 10), {}, 1, 128);
  EXPECT_EQ(one.rows.size(), 1u);
  const auto rep = convergence_study(parse_formula_id("zeta3.v1"), Q(37, 10), {}, 12, 128);
  for (const auto& row : rep.rows) EXPECT_TRUE(Near(row.abs_error, abs(row.partial_value - rep.oracle_value), "1e-35"));
  // integer-only displays run at floor(x)
  FormulaParams half;
  half.m = ComplexRational{Q(1, 2), Q(0)};
  const auto io = convergence_study(parse_formula_id("faulhaber_int.v1"), Q(37, 10), half, 3, 128);
  EXPECT_EQ(io.x, Q(3));
  const auto slow = convergence_study(parse_formula_id("harmonic_cosint.v1"), Q(7, 2), {}, 5, 128);
  EXPECT_EQ(slow.rows.size(), 5u);
}

TEST(GeometricExactness, RationalMode) {
  for (const auto& a : {Q(1, 2), Q(2), Q(5)}) {
    FormulaParams p;
    p.a = a;
    for (long n = 1; n <= 12; ++n) {
      const auto b = brute_force(Family::geometric_stirling, Q(n), p, 128);
      EXPECT_EQ(*b.exact, (pow(a, n + 1) - 1) / (a - 1)) << n;
    }
  }
}

}  // namespace
}  // namespace stirsum

// SPDX-License-Identifier: Apache-2.0
#include "stirsum/formula_catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>

#include "stirsum/combinatorics.hpp"
#include "stirsum/constants.hpp"
#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

constexpr Precision kGuardBits = 32;

ExactRational Q(long num, long den = 1) { return make_rational(num, den); }

ExactRational pow2(long e) {
  if (e >= 0) return ExactRational(pow(BigInt(2), static_cast<unsigned long>(e)));
  return ExactRational(1) / ExactRational(pow(BigInt(2), static_cast<unsigned long>(-e)));
}

ExactRational fact(unsigned n) { return ExactRational(factorial(n)); }

long minus_one_pow(const BigInt& n) { return mpz_odd_p(n.get_mpz_t()) ? -1 : 1; }

BigReal rational_power(const BigReal& base, const ExactRational& e) {
  if (is_integer(e) && e.get_num().fits_slong_p()) return pow(base, e.get_num().get_si());
  if (e.get_den() == 2 && e.get_num().fits_slong_p()) return pow(sqrt(base), e.get_num().get_si());
  return pow(base, BigReal(e, base.precision()));
}

enum class PolyKind { bernoulli, euler };

struct Context {
  const EvalRequest* req = nullptr;
  Precision bits = 0;
  ExactRational x;
  ExactRational t;
  BigInt n;
  ComplexRational m;
  ExactRational a;
  BigReal xr;
  BigReal sx;
  BigReal L;
  mutable std::vector<ExactRational> bv;
  mutable std::vector<ExactRational> ev;

  ExactRational B(unsigned i) const {
    if (i >= bv.size()) bv = bernoulli_values(std::max<unsigned>(i, 2 * static_cast<unsigned>(bv.size()) + 8), t);
    return bv[i];
  }
  ExactRational E(unsigned i) const {
    if (i >= ev.size()) ev = euler_values(std::max<unsigned>(i, 2 * static_cast<unsigned>(ev.size()) + 8), t);
    return ev[i];
  }
  BigReal R(const ExactRational& q) const { return BigReal(q, bits); }
  BigReal R(long v) const { return BigReal(v, bits); }
  BigReal zero() const { return BigReal(bits); }
  ComplexReal C(BigReal v) const { return ComplexReal(std::move(v), zero()); }
  BigReal constant(ConstantId id) const { return get_constant({id, std::nullopt, bits}); }
  BigReal constant(ConstantId id, const ExactRational& s) const { return get_constant({id, s, bits}); }
  BigReal xpow(const ExactRational& e) const { return rational_power(xr, e); }
  ComplexReal xpow(const ComplexRational& e) const {
    if (e.is_real()) return C(xpow(e.re));
    return pow(xr, ComplexReal(e, bits));
  }
  long sign_n() const { return minus_one_pow(n); }
  bool complex_m() const { return !m.is_real(); }

  // zeta(-m) and eta(-m), complex when m is.
  ComplexReal zeta_neg_m() const {
    if (m.is_real()) return C(constant(ConstantId::zeta, -m.re));
    return zeta_em(ComplexReal(ComplexRational{-m.re, -m.im}, bits), bits);
  }
  ComplexReal eta_neg_m() const {
    if (m.is_real()) return C(constant(ConstantId::eta, -m.re));
    return eta(ComplexReal(ComplexRational{-m.re, -m.im}, bits), bits);
  }
  ComplexReal m_plus_1() const { return ComplexReal(ComplexRational{m.re + 1, m.im}, bits); }
};

using CoeffFn = std::function<ComplexRational(unsigned l, const ComplexRational& m)>;
using ShiftFn = std::function<unsigned(const ComplexRational& m)>;
using RationalPrefFn = std::function<ExactRational(const ComplexRational& m)>;
using ValueFn = std::function<ComplexReal(const Context&)>;
using RealFn = std::function<BigReal(const Context&)>;

// a_l = coeff(l) * P_{l + shift}(t), P Bernoulli or Euler.
struct SeriesSpec {
  PolyKind kind = PolyKind::bernoulli;
  ShiftFn shift;
  CoeffFn coeff;
  RationalPrefFn rational_pref;
  unsigned start = 1;
  DenominatorShift denominator = DenominatorShift::at_x;
};

struct PartDef {
  SeriesSpec spec;
  ValueFn factor;
  RealFn y;  // empty: x
};

struct FormulaDef {
  CatalogEntry entry;
  ValueFn closed;
  std::vector<PartDef> parts;
  std::function<FormulaResult(const Context&)> custom;
  std::function<void(const EvalRequest&)> validate;
};

SeriesSpec series(PolyKind kind, unsigned shift, std::function<ExactRational(unsigned)> coeff, ExactRational pref, DenominatorShift d,
                  unsigned start = 1) {
  SeriesSpec s;
  s.kind = kind;
  s.shift = [shift](const ComplexRational&) { return shift; };
  s.coeff = [coeff = std::move(coeff)](unsigned l, const ComplexRational&) { return ComplexRational{coeff(l), 0}; };
  s.rational_pref = [pref = std::move(pref)](const ComplexRational&) { return pref; };
  s.start = start;
  s.denominator = d;
  return s;
}

SeriesSpec series_m(PolyKind kind, ShiftFn shift, CoeffFn coeff, RationalPrefFn pref, DenominatorShift d, unsigned start = 1) {
  return SeriesSpec{kind, std::move(shift), std::move(coeff), std::move(pref), start, d};
}

ValueFn real(RealFn f) {
  return [f = std::move(f)](const Context& c) { return c.C(f(c)); };
}

ValueFn unit() {
  return [](const Context& c) { return c.C(c.R(1)); };
}

constexpr auto B = PolyKind::bernoulli;
constexpr auto E = PolyKind::euler;
constexpr auto AT_X = DenominatorShift::at_x;
constexpr auto AT_X1 = DenominatorShift::at_x_plus_1;

ExactRational df(long n) { return double_factorial_odd(n); }
ExactRational sign_l(unsigned l) { return l % 2 == 0 ? 1 : -1; }
ComplexRational binom_m1(const ComplexRational& m, unsigned l) { return generalized_binomial(ComplexRational{m.re + 1, m.im}, l); }

// One factorial-series stream and its prefactor, ready to run.
struct Prepared {
  std::unique_ptr<CoefficientSeries> series;
  DenominatorShift shift;
  BigReal y;
  ComplexReal pref;
};

FormulaResult run_prepared(const Context& c, std::vector<Prepared>& parts, const ComplexReal& closed) {
  const TruncationPolicy& policy = c.req->policy;
  if (policy.max_order < 1) throw ParameterError("max_order must be at least 1");
  const auto table = stirling_table(policy.max_order + 2);
  const unsigned max_k = policy.max_order + 1;
  std::vector<std::unique_ptr<WenigerTermStream>> streams;
  for (auto& p : parts) streams.push_back(std::make_unique<WenigerTermStream>(*p.series, p.y, *table, p.shift, max_k));

  const bool cplx = c.complex_m();
  FormulaResult r;
  if (cplx) {
    r = adaptive_truncate(
        ComplexTermStream([&]() -> std::optional<ComplexReal> {
          std::optional<ComplexReal> acc;
          for (std::size_t i = 0; i < streams.size(); ++i) {
            auto term = streams[i]->next();
            if (!term) continue;
            ComplexReal v = parts[i].pref * term->value;
            acc = acc ? *acc + v : v;
          }
          return acc;
        }),
        policy);
    r.value = closed.re() + r.value;
    r.imag = closed.im() + *r.imag;
  } else {
    r = adaptive_truncate(
        TermStream([&]() -> std::optional<BigReal> {
          std::optional<BigReal> acc;
          for (std::size_t i = 0; i < streams.size(); ++i) {
            auto term = streams[i]->next();
            if (!term) continue;
            BigReal v = parts[i].pref.re() * term->value;
            acc = acc ? *acc + v : v;
          }
          return acc;
        }),
        policy);
    r.value = closed.re() + r.value;
  }
  return r;
}

FormulaResult run_parts(const Context& c, const FormulaDef& def) {
  std::vector<Prepared> prepared;
  for (const auto& part : def.parts) {
    const SeriesSpec spec = part.spec;
    const unsigned shift = spec.shift(c.m);
    const ComplexReal pref = part.factor(c) * c.R(spec.rational_pref(c.m));
    const BigReal y = part.y ? part.y(c) : c.xr;
    auto make = [&c, spec, shift](bool imag) {
      return std::make_unique<ExactCoefficients>(
          [&c, spec, shift, imag](unsigned l) {
            const ComplexRational q = spec.coeff(l, c.m);
            const ExactRational& w = imag ? q.im : q.re;
            if (w == 0) return ExactRational(0);
            return ExactRational(w * (spec.kind == PolyKind::bernoulli ? c.B(l + shift) : c.E(l + shift)));
          },
          spec.start);
    };
    prepared.push_back({make(false), spec.denominator, y, pref});
    if (c.complex_m()) {
      // i * pref multiplies the imaginary coefficient stream
      prepared.push_back({make(true), spec.denominator, y, ComplexReal(-pref.im(), pref.re())});
    }
  }
  return run_prepared(c, prepared, def.closed(c));
}

// Plain power series in k summed by the truncation policy.
FormulaResult run_power_series(const Context& c, std::function<BigReal(unsigned)> term, unsigned first, const BigReal& closed) {
  unsigned k = first;
  const unsigned last = first + c.req->policy.max_order + 1;
  FormulaResult r = adaptive_truncate(
      TermStream([&]() -> std::optional<BigReal> {
        if (k > last) return std::nullopt;
        return term(k++);
      }),
      c.req->policy);
  r.value = closed + r.value;
  return r;
}

FormulaResult exact_result(const Context& c, const BigReal& value) {
  FormulaResult r;
  r.value = value;
  r.error_estimate = c.zero();
  r.status = TruncationStatus::converged;
  return r;
}

// ---- parameter checks ----

const ComplexRational& need_m(const EvalRequest& req) {
  if (!req.params.m) throw ParameterError(to_string(req.formula) + " needs the exponent m");
  const ComplexRational& m = *req.params.m;
  if (m.re == -1 && m.im == 0) throw ParameterError("m must not equal -1");
  return m;
}

void need_real_m(const EvalRequest& req) {
  if (!need_m(req).is_real()) throw ParameterError(to_string(req.formula) + " needs a real exponent m");
}

void need_m_above_minus_one(const EvalRequest& req) {
  need_real_m(req);
  if (!(req.params.m->re > -1)) throw ParameterError(to_string(req.formula) + " needs m > -1");
}

void need_integer_m(const EvalRequest& req) {
  need_real_m(req);
  const ExactRational& m = req.params.m->re;
  if (!is_integer(m) || m < 0) throw ParameterError(to_string(req.formula) + " needs an integer m >= 0");
  if (m > 10000) throw ParameterError("m too large");
}

const ExactRational& need_a(const EvalRequest& req) {
  if (!req.params.a) throw ParameterError(to_string(req.formula) + " needs the base a");
  if (!(*req.params.a > 0)) throw ParameterError("a must be positive");
  return *req.params.a;
}

void need_a_not_one(const EvalRequest& req) {
  if (need_a(req) == 1) throw ParameterError("a must not equal 1");
}

void need_a_em_window(const EvalRequest& req) {
  const ExactRational& a = need_a(req);
  const BigReal l = abs(log(BigReal(a, 128)));
  if (!(l < pi(128) * 2L)) throw ParameterError("a must satisfy exp(-2 pi) < a < exp(2 pi)");
}

// ---- catalog ----

CatalogEntry entry(Family f, unsigned v, std::string description, std::vector<std::string> params, std::vector<std::string> constants) {
  CatalogEntry e;
  e.id = {f, v};
  e.description = std::move(description);
  e.parameters = std::move(params);
  e.constants = std::move(constants);
  return e;
}

BigReal sqrt_closed(const Context& c) {
  const BigReal p = pi(c.bits);
  return c.R(Q(2, 3)) * c.xr * c.sx - c.constant(ConstantId::zeta, Q(3, 2)) / (p * 4L);
}

BigReal k_sqrt_closed(const Context& c) {
  const BigReal p = pi(c.bits);
  return c.R(Q(2, 5)) * c.xr * c.xr * c.sx - c.constant(ConstantId::zeta, Q(5, 2)) * 3L / (p * p * 16L);
}

BigReal k2_sqrt_closed(const Context& c) {
  const BigReal p = pi(c.bits);
  return c.R(Q(2, 7)) * c.xr * c.xr * c.xr * c.sx + c.constant(ConstantId::zeta, Q(7, 2)) * 15L / (p * p * p * 64L);
}

BigReal log_factorial_closed(const Context& c) {
  return c.xr * c.L - c.xr + c.constant(ConstantId::log_two_pi) / 2L - c.L * c.B(1);
}

BigReal k_log_k_closed(const Context& c) {
  const BigReal x2 = c.xr * c.xr;
  return x2 * c.L / 2L - x2 / 4L + c.R(c.B(2) / 2) - c.constant(ConstantId::zeta_prime, -1) - c.xr * c.L * c.B(1) + c.L * c.B(2) / 2L;
}

ComplexReal faulhaber_closed(const Context& c) { return c.xpow(ComplexRational{c.m.re + 1, c.m.im}) / c.m_plus_1() + c.zeta_neg_m(); }

std::vector<FormulaDef> faulhaber_defs(Family family, bool integer_only) {
  const std::string lhs = integer_only ? "sum_{k=1}^{n} k^m" : "sum_{k=1}^{floor x} k^m";
  std::vector<FormulaDef> out;

  FormulaDef v1;
  v1.entry = entry(family, 1, lhs + "; factorial series in binom(m+1,l) B_l({x}) over (x+1)_k", {"m"}, {"zeta(-m)"});
  v1.closed = faulhaber_closed;
  v1.parts = {{series_m(
                   B, [](const ComplexRational&) { return 0u; },
                   [](unsigned l, const ComplexRational& m) { return binom_m1(m, l) * sign_l(l); }, [](const ComplexRational&) { return Q(1); },
                   AT_X1),
               [](const Context& c) { return c.xpow(ComplexRational{c.m.re + 1, c.m.im}) / c.m_plus_1(); }, {}}};
  v1.validate = [](const EvalRequest& r) { need_m(r); };
  out.push_back(v1);

  FormulaDef v2;
  v2.entry = entry(family, 2, lhs + "; factorial series in binom(m+1,l+1) B_{l+1}({x}) over (x+1)_k", {"m"}, {"zeta(-m)"});
  v2.closed = [](const Context& c) { return faulhaber_closed(c) - c.xpow(c.m) * c.R(c.B(1)); };
  v2.parts = {{series_m(
                   B, [](const ComplexRational&) { return 1u; },
                   [](unsigned l, const ComplexRational& m) { return binom_m1(m, l + 1) * sign_l(l); }, [](const ComplexRational&) { return Q(-1); },
                   AT_X1),
               [](const Context& c) { return c.xpow(c.m) / c.m_plus_1(); }, {}}};
  v2.validate = [](const EvalRequest& r) { need_m(r); };
  out.push_back(v2);

  FormulaDef v3;
  v3.entry = entry(family, 3, lhs + " for real m > -1; finite Bernoulli head to ceil(m+1)-1, factorial series from B_{ceil(m+1)}({x})", {"m"},
                   {"zeta(-m)"});
  auto ceil_m1 = [](const ComplexRational& m) { return static_cast<unsigned>(ceil(m.re + 1).get_ui()); };
  v3.closed = [ceil_m1](const Context& c) {
    const unsigned cc = ceil_m1(c.m);
    BigReal head = c.zero();
    for (unsigned j = 1; j + 1 <= cc; ++j)
      head += c.xpow(ExactRational(c.m.re + 1 - j)) * ExactRational(sign_l(j) * generalized_binomial(ExactRational(c.m.re + 1), j) * c.B(j));
    head *= ExactRational(1) / (c.m.re + 1);
    return faulhaber_closed(c) + c.C(head);
  };
  v3.parts = {{series_m(
                   B, [ceil_m1](const ComplexRational& m) { return ceil_m1(m) - 1; },
                   [ceil_m1](unsigned l, const ComplexRational& m) {
                     return ComplexRational{sign_l(l) * generalized_binomial(m.re + 1, l + ceil_m1(m) - 1), 0};
                   },
                   [ceil_m1](const ComplexRational& m) -> ExactRational { return -sign_l(ceil_m1(m)) / (m.re + 1); }, AT_X1),
               [ceil_m1](const Context& c) { return c.C(c.xpow(ExactRational(c.m.re - ceil_m1(c.m) + 2))); }, {}}};
  v3.validate = need_m_above_minus_one;
  out.push_back(v3);

  for (auto& d : out) {
    d.entry.integer_x_only = integer_only;
    d.entry.complex_m = d.entry.id.variant != 3;
  }
  return out;
}

ExactRational stirling2(unsigned l) { return ExactRational(stirling_table(l + 1)->at(l + 1, 2)); }

ExactRational alt_faulhaber_finite_value(const ExactRational& x, const ExactRational& t, long m, bool integer_form) {
  // (-1)^{m+1} only matters at m = 0, where B_1 = -1/2
  const ExactRational eta_m =
      sign_l(static_cast<unsigned>(m + 1)) * ExactRational(pow2(m + 1) - 1) * bernoulli_number(static_cast<unsigned>(m + 1)) / (m + 1);
  const long sn = minus_one_pow(floor(x));
  ExactRational s = 0;
  if (!integer_form) {
    const auto ev = euler_values(static_cast<unsigned>(m), t);
    for (long k = 0; k <= m; ++k)
      s += sign_l(static_cast<unsigned>(k + 1)) * (k + 1) * ExactRational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k + 1))) *
           ev[static_cast<std::size_t>(k)] * pow(x, static_cast<unsigned long>(m - k));
    return eta_m + s * sn / (2 * (m + 1));
  }
  for (long k = 0; k <= m; ++k)
    s += sign_l(static_cast<unsigned>(k)) * (pow2(k + 1) - 1) * ExactRational(binomial(static_cast<unsigned>(m + 1), static_cast<unsigned>(k + 1))) *
         bernoulli_number(static_cast<unsigned>(k + 1)) * pow(x, static_cast<unsigned long>(m - k));
  return eta_m + s * sn / (m + 1);
}

std::vector<FormulaDef> build_registry() {
  std::vector<FormulaDef> defs;
  auto add = [&](FormulaDef d) { defs.push_back(std::move(d)); };
  auto simple = [&](Family f, unsigned v, std::string desc, std::vector<std::string> consts, RealFn closed, std::vector<PartDef> parts) {
    FormulaDef d;
    d.entry = entry(f, v, std::move(desc), {}, std::move(consts));
    d.closed = real(std::move(closed));
    d.parts = std::move(parts);
    add(std::move(d));
  };
  RealFn inv_x = [](const Context& c) { return c.R(1) / c.xr; };
  RealFn inv_sx = [](const Context& c) { return c.R(1) / c.sx; };

  // harmonic
  simple(Family::harmonic, 1, "sum_{k=1}^{floor x} 1/k; factorial series in B_{l+1}({x})/(l+1) over (x)_{k+1}", {"euler_gamma"},
         [](const Context& c) { return c.L + c.constant(ConstantId::euler_gamma) - c.R(c.B(1)) / c.xr; },
         {{series(B, 1, [](unsigned l) -> ExactRational { return Q(1, l + 1); }, -1, AT_X), unit(), {}}});
  simple(Family::harmonic, 2, "sum_{k=1}^{floor x} 1/k; factorial series in B_l({x})/l over (x+1)_k", {"euler_gamma"},
         [](const Context& c) { return c.L + c.constant(ConstantId::euler_gamma); },
         {{series(B, 0, [](unsigned l) -> ExactRational { return Q(1, l); }, -1, AT_X1), unit(), {}}});

  // zeta(2)
  simple(Family::zeta2, 1, "sum_{k=1}^{floor x} 1/k^2; factorial series in B_{l+1}({x}) over x (x)_{k+1}", {"zeta(2)"},
         [](const Context& c) { return c.constant(ConstantId::zeta, 2) - c.R(1) / c.xr - c.R(c.B(1)) / (c.xr * c.xr); },
         {{series(B, 1, [](unsigned) -> ExactRational { return Q(1); }, -1, AT_X), real(inv_x), {}}});
  simple(Family::zeta2, 2, "sum_{k=1}^{floor x} 1/k^2; factorial series in B_l({x}) over (x)_{k+1}", {"zeta(2)"},
         [](const Context& c) { return c.constant(ConstantId::zeta, 2) - c.R(1) / c.xr; },
         {{series(B, 0, [](unsigned) -> ExactRational { return Q(1); }, -1, AT_X), unit(), {}}});

  // zeta(3)
  RealFn inv_x2 = [](const Context& c) { return c.R(1) / (c.xr * c.xr); };
  simple(Family::zeta3, 1, "sum_{k=1}^{floor x} 1/k^3; factorial series in (l+2) B_{l+1}({x}) over 2 x^2 (x)_{k+1}", {"zeta(3)"},
         [](const Context& c) {
           const BigReal x2 = c.xr * c.xr;
           return c.constant(ConstantId::zeta, 3) - c.R(1) / (x2 * 2L) - c.R(c.B(1)) / (x2 * c.xr);
         },
         {{series(B, 1, [](unsigned l) -> ExactRational { return Q(l + 2); }, Q(-1, 2), AT_X), real(inv_x2), {}}});
  simple(Family::zeta3, 2, "sum_{k=1}^{floor x} 1/k^3; factorial series in (l+1) B_l({x}) over 2 x^2 (x+1)_k", {"zeta(3)"},
         [](const Context& c) { return c.constant(ConstantId::zeta, 3) - c.R(1) / (c.xr * c.xr * 2L); },
         {{series(B, 0, [](unsigned l) -> ExactRational { return Q(l + 1); }, Q(-1, 2), AT_X1), real(inv_x2), {}}});

  // sqrt k
  simple(Family::sqrt, 1, "sum_{k=1}^{floor x} sqrt k; factorial series in B_{l+1}({x}) times sqrt x over (x+1)_k", {"zeta(3/2)", "pi"},
         [](const Context& c) { return sqrt_closed(c) - c.sx * c.B(1); },
         {{series(B, 1, [](unsigned l) -> ExactRational { return df(2L * l - 3) / (pow2(l) * fact(l + 1)); }, 1, AT_X1), real([](const Context& c) { return c.sx; }),
           {}}});
  simple(Family::sqrt, 2, "sum_{k=1}^{floor x} sqrt k; factorial series in B_{l+2}({x}) over sqrt x (x+1)_k", {"zeta(3/2)", "pi"},
         [](const Context& c) { return sqrt_closed(c) - c.sx * c.B(1) + c.R(c.B(2) / 4) / c.sx; },
         {{series(B, 2, [](unsigned l) -> ExactRational { return df(2L * l - 1) / (pow2(l + 1) * fact(l + 2)); }, 1, AT_X1), real(inv_sx), {}}});
  simple(Family::sqrt, 3, "sum_{k=1}^{floor x} sqrt k; factorial series in B_l({x}) times x sqrt x over (x+1)_k", {"zeta(3/2)", "pi"}, sqrt_closed,
         {{series(B, 0, [](unsigned l) -> ExactRational { return df(2L * l - 5) / (pow2(l - 1L) * fact(l)); }, 1, AT_X1),
           real([](const Context& c) { return c.xr * c.sx; }), {}}});

  // k sqrt k
  simple(Family::k_sqrt, 1, "sum_{k=1}^{floor x} k sqrt k; factorial series in B_{l+1}({x}) times x^{3/2} over (x+1)_k", {"zeta(5/2)", "pi"},
         [](const Context& c) { return k_sqrt_closed(c) - c.xr * c.sx * c.B(1); },
         {{series(B, 1, [](unsigned l) -> ExactRational { return df(2L * l - 5) / (pow2(l - 1L) * fact(l + 1)); }, Q(-3, 2), AT_X1),
           real([](const Context& c) { return c.xr * c.sx; }), {}}});
  simple(Family::k_sqrt, 2, "sum_{k=1}^{floor x} k sqrt k; factorial series in B_{l+3}({x}) over sqrt x (x+1)_k", {"zeta(5/2)", "pi"},
         [](const Context& c) {
           return k_sqrt_closed(c) - c.xr * c.sx * c.B(1) + c.sx * (Q(3, 4) * c.B(2)) - c.R(c.B(3) / 8) / c.sx;
         },
         {{series(B, 3, [](unsigned l) -> ExactRational { return df(2L * l - 1) / (pow2(l + 1) * fact(l + 3)); }, Q(-3, 2), AT_X1), real(inv_sx), {}}});
  simple(Family::k_sqrt, 3, "sum_{k=1}^{floor x} k sqrt k; factorial series in B_l({x}) times x^{5/2} over (x+1)_k", {"zeta(5/2)", "pi"},
         k_sqrt_closed,
         {{series(B, 0, [](unsigned l) -> ExactRational { return df(2L * l - 7) / (pow2(l - 2L) * fact(l)); }, Q(-3, 2), AT_X1),
           real([](const Context& c) { return c.xr * c.xr * c.sx; }), {}}});

  // k^2 sqrt k
  simple(Family::k2_sqrt, 1, "sum_{k=1}^{floor x} k^2 sqrt k; factorial series in B_{l+1}({x}) times x^{5/2} over (x+1)_k", {"zeta(7/2)", "pi"},
         [](const Context& c) { return k2_sqrt_closed(c) - c.xr * c.xr * c.sx * c.B(1); },
         {{series(B, 1, [](unsigned l) -> ExactRational { return df(2L * l - 7) / (pow2(l - 2L) * fact(l + 1)); }, Q(15, 4), AT_X1),
           real([](const Context& c) { return c.xr * c.xr * c.sx; }), {}}});
  simple(Family::k2_sqrt, 2, "sum_{k=1}^{floor x} k^2 sqrt k; factorial series in B_{l+4}({x}) over sqrt x (x+1)_k", {"zeta(7/2)", "pi"},
         [](const Context& c) {
           return k2_sqrt_closed(c) - c.xr * c.xr * c.sx * c.B(1) + c.xr * c.sx * (Q(5, 4) * c.B(2)) - c.sx * (Q(5, 8) * c.B(3)) +
                  c.R(Q(5, 64) * c.B(4)) / c.sx;
         },
         {{series(B, 4, [](unsigned l) -> ExactRational { return df(2L * l - 1) / (pow2(l + 1) * fact(l + 4)); }, Q(15, 4), AT_X1), real(inv_sx), {}}});
  simple(Family::k2_sqrt, 3, "sum_{k=1}^{floor x} k^2 sqrt k; factorial series in B_l({x}) times x^{7/2} over (x+1)_k", {"zeta(7/2)", "pi"},
         k2_sqrt_closed,
         {{series(B, 0, [](unsigned l) -> ExactRational { return df(2L * l - 9) / (pow2(l - 3L) * fact(l)); }, Q(15, 4), AT_X1),
           real([](const Context& c) { return c.xr * c.xr * c.xr * c.sx; }), {}}});

  // 1/sqrt k
  simple(Family::inv_sqrt, 1, "sum_{k=1}^{floor x} 1/sqrt k; factorial series in B_{l+1}({x}) over sqrt x (x+1)_k", {"zeta(1/2)"},
         [](const Context& c) { return c.sx * 2L + c.constant(ConstantId::zeta, Q(1, 2)) - c.R(c.B(1)) / c.sx; },
         {{series(B, 1, [](unsigned l) -> ExactRational { return df(2L * l - 1) / (pow2(l) * fact(l + 1)); }, -1, AT_X1), real(inv_sx), {}}});
  simple(Family::inv_sqrt, 2, "sum_{k=1}^{floor x} 1/sqrt k; factorial series in B_l({x}) times sqrt x over (x+1)_k", {"zeta(1/2)"},
         [](const Context& c) { return c.sx * 2L + c.constant(ConstantId::zeta, Q(1, 2)); },
         {{series(B, 0, [](unsigned l) -> ExactRational { return df(2L * l - 3) / (pow2(l - 1L) * fact(l)); }, -1, AT_X1),
           real([](const Context& c) { return c.sx; }), {}}});

  // zeta(3/2)
  simple(Family::zeta_3_2, 1, "sum_{k=1}^{floor x} k^{-3/2}; factorial series in B_{l+1}({x}) over sqrt x (x)_{k+1}", {"zeta(3/2)"},
         [](const Context& c) { return c.constant(ConstantId::zeta, Q(3, 2)) - c.R(2) / c.sx - c.R(c.B(1)) / (c.xr * c.sx); },
         {{series(B, 1, [](unsigned l) -> ExactRational { return df(2L * l + 1) / (pow2(l + 1) * fact(l + 1)); }, -2, AT_X), real(inv_sx), {}}});
  simple(Family::zeta_3_2, 2, "sum_{k=1}^{floor x} k^{-3/2}; factorial series in B_l({x}) over sqrt x (x+1)_k", {"zeta(3/2)"},
         [](const Context& c) { return c.constant(ConstantId::zeta, Q(3, 2)) - c.R(2) / c.sx; },
         {{series(B, 0, [](unsigned l) -> ExactRational { return df(2L * l - 1) / (pow2(l) * fact(l)); }, -2, AT_X1), real(inv_sx), {}}});

  // zeta(5/2)
  simple(Family::zeta_5_2, 1, "sum_{k=1}^{floor x} k^{-5/2}; factorial series in B_{l+1}({x}) over x sqrt x (x)_{k+1}", {"zeta(5/2)"},
         [](const Context& c) {
           return c.constant(ConstantId::zeta, Q(5, 2)) - c.R(2) / (c.xr * c.sx * 3L) - c.R(c.B(1)) / (c.xr * c.xr * c.sx);
         },
         {{series(B, 1, [](unsigned l) -> ExactRational { return df(2L * l + 3) / (pow2(l + 2) * fact(l + 1)); }, Q(-4, 3), AT_X),
           real([](const Context& c) { return c.R(1) / (c.xr * c.sx); }), {}}});
  simple(Family::zeta_5_2, 2, "sum_{k=1}^{floor x} k^{-5/2}; factorial series in B_l({x}) over sqrt x (x)_{k+1}", {"zeta(5/2)"},
         [](const Context& c) { return c.constant(ConstantId::zeta, Q(5, 2)) - c.R(2) / (c.xr * c.sx * 3L); },
         {{series(B, 0, [](unsigned l) -> ExactRational { return df(2L * l + 1) / (pow2(l + 1) * fact(l)); }, Q(-4, 3), AT_X), real(inv_sx), {}}});

  for (auto& d : faulhaber_defs(Family::faulhaber_ext, false)) add(std::move(d));
  for (auto& d : faulhaber_defs(Family::faulhaber_int, true)) add(std::move(d));

  // log k
  simple(Family::log_factorial, 1, "sum_{k=1}^{floor x} log k = log floor(x)!; factorial series in B_{l+1}({x})/(l(l+1)) over (x+1)_k",
         {"log_two_pi"}, log_factorial_closed,
         {{series(B, 1, [](unsigned l) -> ExactRational { return Q(1, static_cast<long>(l) * (l + 1)); }, 1, AT_X1), unit(), {}}});
  simple(Family::log_factorial, 2, "sum_{k=1}^{floor x} log k; factorial series in B_{l+2}({x})/((l+1)(l+2)) over (x)_{k+1}", {"log_two_pi"},
         [](const Context& c) { return log_factorial_closed(c) + c.R(c.B(2) / 2) / c.xr; },
         {{series(B, 2, [](unsigned l) -> ExactRational { return Q(1, static_cast<long>(l + 1) * (l + 2)); }, 1, AT_X), unit(), {}}});
  simple(Family::log_factorial, 3, "sum_{k=1}^{floor x} log k; factorial series in B_l({x})/(l(l-1)) times x over (x+1)_k", {"log_two_pi"},
         log_factorial_closed,
         {{series(B, 0, [](unsigned l) -> ExactRational { return l < 2 ? Q(0) : Q(1, static_cast<long>(l) * (l - 1)); }, 1, AT_X1),
           real([](const Context& c) { return c.xr; }), {}}});

  // k log k
  simple(Family::k_log_k, 1, "sum_{k=1}^{floor x} k log k; factorial series in B_{l+2}({x})/(l(l+1)(l+2)) over (x+1)_k", {"zeta_prime(-1)"},
         k_log_k_closed,
         {{series(B, 2, [](unsigned l) -> ExactRational { return Q(1, static_cast<long>(l) * (l + 1) * (l + 2)); }, -1, AT_X1), unit(), {}}});
  simple(Family::k_log_k, 2, "sum_{k=1}^{floor x} k log k; factorial series in B_{l+3}({x})/((l+1)(l+2)(l+3)) over (x)_{k+1}",
         {"zeta_prime(-1)"}, [](const Context& c) { return k_log_k_closed(c) - c.R(c.B(3) / 6) / c.xr; },
         {{series(B, 3, [](unsigned l) -> ExactRational { return Q(1, static_cast<long>(l + 1) * (l + 2) * (l + 3)); }, -1, AT_X), unit(), {}}});

  // log k / k
  simple(Family::logk_over_k, 1, "sum_{k=1}^{floor x} log(k)/k; two factorial series over (x)_{k+1}, one multiplied by log x", {"stieltjes_1"},
         [](const Context& c) { return c.L * c.L / 2L + c.constant(ConstantId::stieltjes_1) - c.L / c.xr * c.B(1); },
         {{series(B, 1, [](unsigned l) -> ExactRational { return sign_l(l + 1) * stirling2(l) / fact(l + 1); }, 1, AT_X), unit(), {}},
          {series(B, 1, [](unsigned l) -> ExactRational { return Q(1, l + 1); }, -1, AT_X), real([](const Context& c) { return c.L; }), {}}});

  // log k / k^2
  simple(Family::logk_over_k2, 1, "sum_{k=1}^{floor x} log(k)/k^2; two factorial series over x (x)_{k+1}, one multiplied by log x",
         {"zeta_prime(2)"},
         [](const Context& c) {
           return -c.constant(ConstantId::zeta_prime, 2) - c.L / c.xr - c.R(1) / c.xr - c.L / (c.xr * c.xr) * c.B(1);
         },
         {{series(B, 1, [](unsigned l) -> ExactRational { return log_weight(l) / (l + 1); }, 1, AT_X), real(inv_x), {}},
          {series(B, 1, [](unsigned) -> ExactRational { return Q(1); }, -1, AT_X), real([](const Context& c) { return c.L / c.xr; }), {}}});

  // log^2 k
  simple(Family::log_squared, 1, "sum_{k=1}^{floor x} log^2 k; two factorial series over (x)_{k+1}, one multiplied by log x",
         {"euler_gamma", "stieltjes_1", "pi", "log_two_pi"},
         [](const Context& c) {
           const BigReal g = c.constant(ConstantId::euler_gamma);
           const BigReal p = pi(c.bits);
           const BigReal l2p = c.constant(ConstantId::log_two_pi);
           return c.xr * c.L * c.L - c.xr * c.L * 2L + c.xr * 2L + g * g / 2L - p * p / 24L - l2p * l2p / 2L +
                  c.constant(ConstantId::stieltjes_1) - c.L * c.L * c.B(1) + c.L / c.xr * c.B(2);
         },
         {{series(B, 2, [](unsigned l) -> ExactRational { return sign_l(l) * stirling2(l) / fact(l + 2); }, 2, AT_X), unit(), {}},
          {series(B, 2, [](unsigned l) -> ExactRational { return Q(1, static_cast<long>(l + 1) * (l + 2)); }, 2, AT_X),
           real([](const Context& c) { return c.L; }), {}}});

  // Gregory-Leibniz
  RealFn sign_n = [](const Context& c) { return c.R(c.sign_n()); };
  simple(Family::gregory_leibniz, 1, "sum_{k=0}^{floor x} (-1)^k/(2k+1); factorial series in 2^l E_l({x}) over (2x+1)_{k+1}", {"pi"},
         [](const Context& c) { return pi(c.bits) / 4L; },
         {{series(E, 0, [](unsigned l) -> ExactRational { return pow2(l); }, Q(1, 2), AT_X, 0), real(sign_n),
           [](const Context& c) { return c.xr * 2L + c.R(1); }}});
  simple(Family::gregory_leibniz, 2, "sum_{k=0}^{n} (-1)^k/(2k+1) at integer n; factorial series in Bernoulli numbers over (2n+1)_{k+1}", {"pi"},
         [](const Context& c) { return pi(c.bits) / 4L; },
         {{series(B, 1, [](unsigned l) -> ExactRational { return pow2(l) * (pow2(l + 1) - 1) / (l + 1); }, -1, AT_X, 0), real(sign_n),
           [](const Context& c) { return c.xr * 2L + c.R(1); }}});
  defs.back().entry.integer_x_only = true;

  // alternating harmonic
  simple(Family::alt_harmonic, 1, "sum_{k=1}^{floor x} (-1)^{k+1}/k; factorial series in E_l({x}) over (x)_{k+1}", {"log_two"},
         [](const Context& c) { return c.constant(ConstantId::log_two); },
         {{series(E, 0, [](unsigned) -> ExactRational { return Q(1); }, Q(-1, 2), AT_X, 0), real(sign_n), {}}});
  simple(Family::alt_harmonic, 2, "sum_{k=1}^{n} (-1)^{k+1}/k at integer n; factorial series in Bernoulli numbers over (n)_{k+1}", {"log_two"},
         [](const Context& c) { return c.constant(ConstantId::log_two); },
         {{series(B, 1, [](unsigned l) -> ExactRational { return (pow2(l + 1) - 1) / (l + 1); }, 1, AT_X, 0), real(sign_n), {}}});
  defs.back().entry.integer_x_only = true;

  // alternating Faulhaber, finite
  {
    FormulaDef d;
    d.entry = entry(Family::alt_faulhaber_finite, 1, "sum_{k=1}^{floor x} (-1)^{k+1} k^m for integer m >= 0; finite sum in E_k({x})", {"m"},
                    {"eta(-m)"});
    d.entry.finite = true;
    d.validate = need_integer_m;
    d.custom = [](const Context& c) {
      return exact_result(c, c.R(alt_faulhaber_finite_value(c.x, c.t, c.m.re.get_num().get_si(), false)));
    };
    add(std::move(d));
    d.entry = entry(Family::alt_faulhaber_finite, 2, "sum_{k=1}^{n} (-1)^{k+1} k^m for integer m >= 0 and n; finite sum in Bernoulli numbers",
                    {"m"}, {"eta(-m)"});
    d.entry.finite = true;
    d.entry.integer_x_only = true;
    d.custom = [](const Context& c) {
      return exact_result(c, c.R(alt_faulhaber_finite_value(c.x, c.t, c.m.re.get_num().get_si(), true)));
    };
    add(std::move(d));
  }

  // alternating Faulhaber, general m
  {
    FormulaDef d;
    d.entry = entry(Family::alt_faulhaber_gen, 1, "sum_{k=1}^{floor x} (-1)^{k+1} k^m; factorial series in E_l({x}) over (x+1)_k", {"m"},
                    {"eta(-m)"});
    d.entry.complex_m = true;
    d.validate = [](const EvalRequest& r) { need_m(r); };
    d.closed = [](const Context& c) { return c.eta_neg_m(); };
    d.parts = {{series_m(
                    E, [](const ComplexRational&) { return 0u; },
                    [](unsigned l, const ComplexRational& m) { return binom_m1(m, l + 1) * (sign_l(l) * (l + 1)); },
                    [](const ComplexRational&) { return Q(-1, 2); }, AT_X1, 0),
                [](const Context& c) { return c.xpow(c.m) * c.R(c.sign_n()) / c.m_plus_1(); }, {}}};
    add(d);
    d.entry = entry(Family::alt_faulhaber_gen, 2, "sum_{k=1}^{n} (-1)^{k+1} k^m at integer n; factorial series in Bernoulli numbers over (n+1)_k",
                    {"m"}, {"eta(-m)"});
    d.entry.complex_m = true;
    d.entry.integer_x_only = true;
    d.parts = {{series_m(
                    B, [](const ComplexRational&) { return 1u; },
                    [](unsigned l, const ComplexRational& m) { return binom_m1(m, l + 1) * (sign_l(l) * (pow2(l + 1) - 1)); },
                    [](const ComplexRational&) { return Q(1); }, AT_X1, 0),
                [](const Context& c) { return c.xpow(c.m) * c.R(c.sign_n()) / c.m_plus_1(); }, {}}};
    add(d);
  }

  // geometric, factorial series with real coefficients
  {
    auto geometric_closed = [](const Context& c) {
      const BigReal ax = exp(c.xr * log(c.R(c.a)));
      return ax / log(c.R(c.a)) + c.R(1) / c.R(ExactRational(1) - c.a);
    };
    FormulaDef d;
    d.entry = entry(Family::geometric_stirling, 1, "sum_{k=0}^{floor x} a^k for a > 0, a != 1; factorial series in x^l log(a)^{l-1} B_l({x})/l!",
                    {"a"}, {});
    d.validate = need_a_not_one;
    d.custom = [geometric_closed](const Context& c) {
      const ExactRational x = c.x;
      const ExactRational a = c.a;
      std::vector<Prepared> parts;
      parts.push_back({std::make_unique<RealCoefficients>([&c, x, a](unsigned l, Precision bits) {
                         const BigReal la = log(BigReal(a, bits));
                         return BigReal(sign_l(l) * pow(x, l) * c.B(l) / fact(l), bits) * pow(la, static_cast<long>(l) - 1);
                       }),
                       AT_X1, c.xr, c.C(exp(c.xr * log(c.R(a))))});
      return run_prepared(c, parts, c.C(geometric_closed(c)));
    };
    add(d);
    d.entry = entry(Family::geometric_stirling, 2, "sum_{k=0}^{n} a^k at integer n; factorial series in n^l log(a)^{l-1} B_l/l!", {"a"}, {});
    d.entry.integer_x_only = true;
    add(d);

    FormulaDef e;
    e.entry = entry(Family::alt_geometric_stirling, 1, "sum_{k=0}^{floor x} (-a)^k for a > 0; factorial series in x^l log(a)^l E_l({x})/l!",
                    {"a"}, {});
    e.validate = [](const EvalRequest& r) { need_a(r); };
    e.custom = [](const Context& c) {
      const ExactRational x = c.x;
      const ExactRational a = c.a;
      std::vector<Prepared> parts;
      parts.push_back({std::make_unique<RealCoefficients>(
                           [&c, x, a](unsigned l, Precision bits) {
                             const BigReal la = log(BigReal(a, bits));
                             return BigReal(sign_l(l) * pow(x, l) * c.E(l) / fact(l), bits) * pow(la, static_cast<long>(l));
                           },
                           0),
                       AT_X1, c.xr, c.C(exp(c.xr * log(c.R(a))) * c.sign_n() / 2L)});
      return run_prepared(c, parts, c.C(c.R(1) / c.R(a + 1)));
    };
    add(e);
    e.entry = entry(Family::alt_geometric_stirling, 2, "sum_{k=0}^{n} (-a)^k at integer n; factorial series in Bernoulli numbers over (n+1)_k",
                    {"a"}, {});
    e.entry.integer_x_only = true;
    e.custom = [](const Context& c) {
      const ExactRational x = c.x;
      const ExactRational a = c.a;
      std::vector<Prepared> parts;
      parts.push_back({std::make_unique<RealCoefficients>(
                           [x, a](unsigned l, Precision bits) {
                             const BigReal la = log(BigReal(a, bits));
                             return BigReal(sign_l(l) * (pow2(l + 1) - 1) * bernoulli_number(l + 1) * pow(x, l) / fact(l + 1), bits) *
                                    pow(la, static_cast<long>(l));
                           },
                           0),
                       AT_X1, c.xr, c.C(-exp(c.xr * log(c.R(a))) * c.sign_n())});
      return run_prepared(c, parts, c.C(c.R(1) / c.R(a + 1)));
    };
    add(e);
  }

  // Euler-Maclaurin geometric forms: plain power series in log a
  {
    FormulaDef d;
    d.entry = entry(Family::geometric_em, 1, "sum_{k=0}^{floor x} a^k for exp(-2 pi) < a < exp(2 pi), a != 1; power series in log(a) B_k({x})/k!",
                    {"a"}, {});
    d.validate = [](const EvalRequest& r) {
      need_a_not_one(r);
      need_a_em_window(r);
    };
    d.custom = [](const Context& c) {
      const BigReal la = log(c.R(c.a));
      const BigReal ax = exp(c.xr * la);
      return run_power_series(
          c, [&](unsigned k) { return ax * pow(la, static_cast<long>(k) - 1) * c.R(sign_l(k) * c.B(k) / fact(k)); }, 1,
          ax / la + c.R(1) / c.R(ExactRational(1) - c.a));
    };
    add(d);

    FormulaDef e;
    e.entry = entry(Family::alt_geometric_em, 1, "sum_{k=0}^{floor x} (-a)^k for exp(-2 pi) < a < exp(2 pi); power series in log(a) B_k({x})/k!",
                    {"a"}, {});
    e.validate = need_a_em_window;
    e.custom = [](const Context& c) {
      const BigReal la = log(c.R(c.a));
      const BigReal ax = exp(c.xr * la);
      // (a-1)/log a, equal to 1 at a = 1
      const BigReal q = c.a == 1 ? c.R(1) : c.R(c.a - 1) / la;
      const BigReal lead = ax * q * c.sign_n() / c.R(c.a + 1);
      return run_power_series(
          c, [&](unsigned k) { return lead * pow(la, static_cast<long>(k)) * c.R(sign_l(k) * c.B(k) / fact(k)); }, 0, c.R(1) / c.R(c.a + 1));
    };
    add(e);

    FormulaDef f;
    f.entry = entry(Family::exp_geometric, 1, "sum_{k=0}^{floor x} e^k; power series in B_k({x})/k!", {}, {});
    f.custom = [](const Context& c) {
      const BigReal ex = exp(c.xr);
      const BigReal e1 = exp(c.R(1));
      return run_power_series(
          c, [&](unsigned k) { return ex * c.R(sign_l(k) * c.B(k) / fact(k)); }, 1, ex + c.R(1) / (c.R(1) - e1));
    };
    add(f);
  }

  // self-counting sequence
  {
    FormulaDef d;
    d.entry = entry(Family::self_counting, 1, "sum_{k=1}^{floor x} floor(1/2 + sqrt(2k)); closed form in r = sqrt(8x+1)", {}, {});
    d.entry.finite = true;
    d.custom = [](const Context& c) {
      const ExactRational q = 8 * c.x + 1;
      const BigReal r = sqrt(c.R(q));
      // floor((r-1)/2) = floor((floor(r)-1)/2), floor(r) = isqrt(floor(q))
      BigInt fr;
      mpz_sqrt(fr.get_mpz_t(), floor(q).get_mpz_t());
      BigInt fy;
      mpz_fdiv_q_2exp(fy.get_mpz_t(), BigInt(fr - 1).get_mpz_t(), 1);
      const BigReal y = (r - c.R(1)) / 2L;
      const BigReal fyv = y - BigReal(fy, c.bits);
      auto b1 = [&](const BigReal& v) { return v - c.R(Q(1, 2)); };
      auto b2 = [&](const BigReal& v) { return v * v - v + c.R(Q(1, 6)); };
      auto b3 = [&](const BigReal& v) { return v * v * v - v * v * Q(3, 2) + v * Q(1, 2); };
      const BigReal b1t = c.R(c.B(1));
      BigReal v = c.xr * r / 3L - r * Q(5, 24) - r / 2L * b1t + b1(fyv) * b1t + b1(fyv) / 2L - r / 4L * b2(fyv) + b3(fyv) / 6L;
      return exact_result(c, v);
    };
    add(std::move(d));
  }

  // slowly convergent forms; evaluated by evaluate_slow
  {
    FormulaDef d;
    d.entry = entry(Family::sqrt_fresnel, 1, "sum_{k=1}^{floor x} sqrt k; outer series over FresnelS(2 sqrt(k x))", {}, {});
    d.entry.slow = true;
    add(d);
    d.entry = entry(Family::harmonic_cosint, 1, "sum_{k=1}^{floor x} 1/k; outer series over Ci(2 pi k x)", {}, {"euler_gamma"});
    d.entry.slow = true;
    add(std::move(d));
  }

  for (auto& d : defs) {
    if (!d.validate) d.validate = [](const EvalRequest&) {};
  }
  return defs;
}

const std::vector<FormulaDef>& registry() {
  static const std::vector<FormulaDef> defs = build_registry();
  return defs;
}

const FormulaDef& lookup(const FormulaId& id) {
  for (const auto& d : registry())
    if (d.entry.id == id) return d;
  throw ParameterError("unknown formula " + to_string(id));
}

void check_request(const FormulaDef& def, const EvalRequest& req) {
  if (!(req.x > 0)) throw ParameterError("x must be positive");
  if (req.precision_bits < 64) throw ParameterError("precision must be at least 64 bits");
  if (def.entry.integer_x_only && !is_integer(req.x)) throw ParameterError(to_string(def.entry.id) + " needs an integer x");
  def.validate(req);
}

}  // namespace

FormulaResult evaluate(const EvalRequest& req) {
  const FormulaDef& def = lookup(req.formula);
  if (def.entry.slow) throw CapabilityError(to_string(req.formula) + " is a slow outer series; use evaluate_slow");
  check_request(def, req);

  Context c;
  c.req = &req;
  c.bits = req.precision_bits + kGuardBits;
  c.x = req.x;
  c.t = fractional_part(req.x);
  c.n = floor(req.x);
  c.m = req.params.m.value_or(ComplexRational{0, 0});
  c.a = req.params.a.value_or(ExactRational(0));
  c.xr = c.R(req.x);
  c.sx = sqrt(c.xr);
  c.L = log(c.xr);

  FormulaResult r = def.custom ? def.custom(c) : run_parts(c, def);
  r.value = r.value.at_precision(req.precision_bits);
  if (r.imag) r.imag = r.imag->at_precision(req.precision_bits);
  r.error_estimate = r.error_estimate.at_precision(req.precision_bits);
  return r;
}

RationalPolynomial numerator_polynomial(const FormulaId& formula, unsigned k, const FormulaParams& params) {
  const FormulaDef& def = lookup(formula);
  if (def.parts.size() != 1) throw CapabilityError(to_string(formula) + " has no single polynomial numerator");
  if (k < 1) throw ParameterError("order k must be positive");
  const ComplexRational m = params.m.value_or(ComplexRational{0, 0});
  if (!def.entry.parameters.empty()) {
    EvalRequest probe;
    probe.formula = formula;
    probe.x = 1;
    probe.params = params;
    def.validate(probe);
  }
  if (!m.is_real()) throw CapabilityError("numerator polynomials need a real m");
  const SeriesSpec& spec = def.parts[0].spec;
  const unsigned shift = spec.shift(m);
  const auto table = stirling_table(k);
  RationalPolynomial acc;
  for (unsigned l = 1; l <= k; ++l) {
    const ExactRational q = sign_l(l) * ExactRational(table->at(k, l)) * spec.coeff(l, m).re;
    if (q == 0) continue;
    acc += (spec.kind == PolyKind::bernoulli ? bernoulli_polynomial(l + shift) : euler_polynomial(l + shift)) * q;
  }
  acc *= sign_l(k) * spec.rational_pref(m);
  if (def.entry.integer_x_only) return RationalPolynomial({acc(ExactRational(0))});
  return acc;
}

ComplexRational faulhaber_inner_sum(const ComplexRational& m, unsigned k, unsigned l_shift, const ExactRational& t) {
  if (k < 1) throw ParameterError("order k must be positive");
  if (m.re == -1 && m.im == 0) throw ParameterError("m must not equal -1");
  if (l_shift > 1) {
    if (!m.is_real()) throw CapabilityError("the ceil(m+1) shift needs a real m");
    if (!(m.re > -1) || l_shift != ceil(m.re + 1).get_ui() - 1) throw ParameterError("l_shift must be 0, 1 or ceil(m+1)-1");
  }
  const auto table = stirling_table(k);
  const auto bv = bernoulli_values(k + l_shift, t);
  ComplexRational acc{0, 0};
  for (unsigned l = 1; l <= k; ++l)
    acc = acc + binom_m1(m, l + l_shift) * (ExactRational(table->at(k, l)) * bv[l + l_shift]);
  return acc;
}

ExactRational log_weight(unsigned l) {
  ExactRational w = 0;
  for (unsigned j = 0; j < l; ++j) w += Q(j + 1, l - j);
  return w;
}

LogInnerSum log_family_inner_sum(const FormulaId& formula, unsigned k, const ExactRational& t) {
  const Family f = formula.family;
  if (f != Family::logk_over_k && f != Family::logk_over_k2 && f != Family::log_squared)
    throw CapabilityError(to_string(formula) + " is not a logarithmic two-series family");
  if (k < 1) throw ParameterError("order k must be positive");
  const FormulaDef& def = lookup(formula);
  const auto table = stirling_table(k);
  const auto bv = bernoulli_values(k + 2, t);
  LogInnerSum out{0, 0};
  for (unsigned part = 0; part < 2; ++part) {
    const SeriesSpec& spec = def.parts[part].spec;
    const unsigned shift = spec.shift({0, 0});
    ExactRational acc = 0;
    for (unsigned l = 1; l <= k; ++l) acc += sign_l(l) * ExactRational(table->at(k, l)) * spec.coeff(l, {0, 0}).re * bv[l + shift];
    (part == 0 ? out.log_free : out.log_coefficient) = acc;
  }
  return out;
}

BigReal log_family_inner_sum(const FormulaId& formula, unsigned k, const ExactRational& t, const BigReal& log_x) {
  const LogInnerSum s = log_family_inner_sum(formula, k, t);
  return BigReal(s.log_free, log_x.precision()) + log_x * s.log_coefficient;
}

const std::vector<CatalogEntry>& list_formulas() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& d : registry()) out.push_back(d.entry);
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const FormulaId& id) { return lookup(id).entry; }

FormulaParams default_params(const FormulaId& id) {
  FormulaParams p;
  switch (id.family) {
    case Family::faulhaber_ext:
    case Family::faulhaber_int:
    case Family::alt_faulhaber_gen:
      p.m = ComplexRational{Q(1, 2), 0};
      break;
    case Family::alt_faulhaber_finite:
      p.m = ComplexRational{Q(3), 0};
      break;
    case Family::geometric_stirling:
    case Family::alt_geometric_stirling:
    case Family::geometric_em:
    case Family::alt_geometric_em:
      p.a = Q(1, 2);
      break;
    default:
      break;
  }
  return p;
}

}  // namespace stirsum

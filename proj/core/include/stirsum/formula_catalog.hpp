// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stirsum/big_real.hpp"
#include "stirsum/complex.hpp"
#include "stirsum/exact.hpp"
#include "stirsum/formula_id.hpp"
#include "stirsum/rational_polynomial.hpp"
#include "stirsum/series_engine.hpp"

namespace stirsum {

struct FormulaParams {
  // Exponent of the Faulhaber families; complex only where the family allows it.
  std::optional<ComplexRational> m;
  // Base of the geometric families.
  std::optional<ExactRational> a;
};

struct EvalRequest {
  FormulaId formula{Family::harmonic, 1};
  // Held exactly so that {x} and the polynomial values are exact.
  ExactRational x;
  FormulaParams params;
  Precision precision_bits = 192;
  TruncationPolicy policy;
};

// Right-hand side of the selected formula at x. Parameter violations throw
// ParameterError; an unsupported combination throws CapabilityError (the
// slow families go through evaluate_slow instead). Finite closed forms come
// back with error_estimate 0 and orders_used 0.
FormulaResult evaluate(const EvalRequest& req);

// Exact polynomial in t = {x} standing over the k-th denominator, with the
// rational part of the family prefactor (its sign included) folded in. The
// x-dependent part of the prefactor stays outside. Integer-only variants
// give the constant polynomial at t = 0. Families whose coefficients are not
// rational multiples of one polynomial family throw CapabilityError.
RationalPolynomial numerator_polynomial(const FormulaId& formula, unsigned k, const FormulaParams& params = {});

// sum_{l=1}^{k} binom(m+1, l+l_shift) S(k,l) B_{l+l_shift}(t).
ComplexRational faulhaber_inner_sum(const ComplexRational& m, unsigned k, unsigned l_shift, const ExactRational& t);

struct LogInnerSum {
  ExactRational log_free;
  ExactRational log_coefficient;
};

// The two displayed inner sums of the logarithmic families at order k.
LogInnerSum log_family_inner_sum(const FormulaId& formula, unsigned k, const ExactRational& t);
// log_free + log_x * log_coefficient.
BigReal log_family_inner_sum(const FormulaId& formula, unsigned k, const ExactRational& t, const BigReal& log_x);

// sum_{j=0}^{l-1} (j+1)/(l-j)
ExactRational log_weight(unsigned l);

struct CatalogEntry {
  FormulaId id;
  std::string description;
  std::vector<std::string> parameters;
  std::vector<std::string> constants;
  bool integer_x_only = false;
  bool complex_m = false;
  bool finite = false;
  bool slow = false;
};

const std::vector<CatalogEntry>& list_formulas();
const CatalogEntry& catalog_entry(const FormulaId& id);

// Parameters used when a caller sweeps the catalog without supplying them.
FormulaParams default_params(const FormulaId& id);

}  // namespace stirsum

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "stirsum/big_real.hpp"
#include "stirsum/exact.hpp"
#include "stirsum/formula_catalog.hpp"
#include "stirsum/formula_id.hpp"

namespace stirsum {

struct BruteForceResult {
  BigReal value;
  std::optional<BigReal> imag;
  // Set whenever every summand was rational.
  std::optional<ExactRational> exact;
  unsigned long terms = 0;
};

// Left-hand side by literal summation over k, never touching the series
// engine. Rational summands are summed exactly; the rest use compensated
// summation at precision_bits + 32.
BruteForceResult brute_force(Family family, const ExactRational& x, const FormulaParams& params, Precision precision_bits);

struct ConvergenceRow {
  unsigned order = 0;
  BigReal partial_value;
  BigReal abs_error;
  BigReal term_magnitude;
};

struct ConvergenceReport {
  FormulaId formula{Family::harmonic, 1};
  ExactRational x;
  std::vector<ConvergenceRow> rows;
  BigReal oracle_value;
  unsigned long oracle_cost = 0;
};

// One row per truncation order 1..max_order, each a fixed-order evaluation
// (outer_terms for the slow families) compared with brute_force.
ConvergenceReport convergence_study(const FormulaId& formula, const ExactRational& x, const FormulaParams& params, unsigned max_order,
                                    Precision precision_bits);

}  // namespace stirsum

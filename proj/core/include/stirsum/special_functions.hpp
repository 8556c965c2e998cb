// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "stirsum/big_real.hpp"
#include "stirsum/exact.hpp"
#include "stirsum/formula_id.hpp"
#include "stirsum/series_engine.hpp"

namespace stirsum {

// Below the switch the Maclaurin series is used, above it the asymptotic
// expansion truncated at its smallest term. Both depend on the precision.
BigReal fresnel_switch(Precision precision_bits);
BigReal cos_integral_switch(Precision precision_bits);

// S(z) = int_0^z sin(pi t^2 / 2) dt; odd in z.
BigReal fresnel_s(const BigReal& z, Precision precision_bits);
// Ci(z) = gamma + log z + int_0^z (cos t - 1)/t dt. Throws DomainError for z <= 0.
BigReal cos_integral(const BigReal& z, Precision precision_bits);

struct SlowSeriesRequest {
  Family formula = Family::sqrt_fresnel;  // sqrt_fresnel or harmonic_cosint
  ExactRational x;
  unsigned outer_terms = 1000;
  Precision precision_bits = 128;
};

// The outer sum stops after outer_terms terms; error_estimate is the size of
// the first omitted one. Status is converged, as for a fixed-order request.
FormulaResult evaluate_slow(const SlowSeriesRequest& req);

// Analytic bound on the omitted outer tail after K terms.
BigReal slow_tail_bound(Family formula, const ExactRational& x, unsigned outer_terms);

}  // namespace stirsum

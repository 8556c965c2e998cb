// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace stirsum {

enum class Family {
  harmonic,
  zeta2,
  zeta3,
  sqrt,
  k_sqrt,
  k2_sqrt,
  inv_sqrt,
  zeta_3_2,
  zeta_5_2,
  faulhaber_ext,
  faulhaber_int,
  log_factorial,
  k_log_k,
  logk_over_k,
  logk_over_k2,
  log_squared,
  gregory_leibniz,
  alt_harmonic,
  alt_faulhaber_finite,
  alt_faulhaber_gen,
  geometric_stirling,
  alt_geometric_stirling,
  geometric_em,
  alt_geometric_em,
  exp_geometric,
  self_counting,
  // Slowly convergent outer sums over special functions.
  sqrt_fresnel,
  harmonic_cosint,
};

struct FormulaId {
  Family family;
  unsigned variant;

  friend auto operator<=>(const FormulaId&, const FormulaId&) = default;
};

std::string to_string(Family family);
std::string to_string(const FormulaId& id);

// "family.vN". Throws ParameterError for unknown families or variants.
FormulaId parse_formula_id(std::string_view text);

unsigned variant_count(Family family);
bool is_slow(Family family);

// Every id in catalog order.
const std::vector<FormulaId>& all_formula_ids();

}  // namespace stirsum

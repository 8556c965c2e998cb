// SPDX-License-Identifier: Apache-2.0
#include "stirsum/formula_id.hpp"

#include <array>
#include <charconv>

#include "stirsum/errors.hpp"

namespace stirsum {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  unsigned variants;
};

constexpr std::array kFamilies{
    FamilyInfo{Family::harmonic, "harmonic", 2},
    FamilyInfo{Family::zeta2, "zeta2", 2},
    FamilyInfo{Family::zeta3, "zeta3", 2},
    FamilyInfo{Family::sqrt, "sqrt", 3},
    FamilyInfo{Family::k_sqrt, "k_sqrt", 3},
    FamilyInfo{Family::k2_sqrt, "k2_sqrt", 3},
    FamilyInfo{Family::inv_sqrt, "inv_sqrt", 2},
    FamilyInfo{Family::zeta_3_2, "zeta_3_2", 2},
    FamilyInfo{Family::zeta_5_2, "zeta_5_2", 2},
    FamilyInfo{Family::faulhaber_ext, "faulhaber_ext", 3},
    FamilyInfo{Family::faulhaber_int, "faulhaber_int", 3},
    FamilyInfo{Family::log_factorial, "log_factorial", 3},
    FamilyInfo{Family::k_log_k, "k_log_k", 2},
    FamilyInfo{Family::logk_over_k, "logk_over_k", 1},
    FamilyInfo{Family::logk_over_k2, "logk_over_k2", 1},
    FamilyInfo{Family::log_squared, "log_squared", 1},
    FamilyInfo{Family::gregory_leibniz, "gregory_leibniz", 2},
    FamilyInfo{Family::alt_harmonic, "alt_harmonic", 2},
    FamilyInfo{Family::alt_faulhaber_finite, "alt_faulhaber_finite", 2},
    FamilyInfo{Family::alt_faulhaber_gen, "alt_faulhaber_gen", 2},
    FamilyInfo{Family::geometric_stirling, "geometric_stirling", 2},
    FamilyInfo{Family::alt_geometric_stirling, "alt_geometric_stirling", 2},
    FamilyInfo{Family::geometric_em, "geometric_em", 1},
    FamilyInfo{Family::alt_geometric_em, "alt_geometric_em", 1},
    FamilyInfo{Family::exp_geometric, "exp_geometric", 1},
    FamilyInfo{Family::self_counting, "self_counting", 1},
    FamilyInfo{Family::sqrt_fresnel, "sqrt_fresnel", 1},
    FamilyInfo{Family::harmonic_cosint, "harmonic_cosint", 1},
};

const FamilyInfo& info(Family family) {
  for (const auto& f : kFamilies)
    if (f.family == family) return f;
  throw ParameterError("unknown formula family");
}

}  // namespace

std::string to_string(Family family) { return std::string(info(family).name); }

std::string to_string(const FormulaId& id) { return to_string(id.family) + ".v" + std::to_string(id.variant); }

unsigned variant_count(Family family) { return info(family).variants; }

bool is_slow(Family family) { return family == Family::sqrt_fresnel || family == Family::harmonic_cosint; }

FormulaId parse_formula_id(std::string_view text) {
  const auto dot = text.rfind(".v");
  if (dot == std::string_view::npos) throw ParameterError("formula id must look like family.vN: '" + std::string(text) + "'");
  const std::string_view name = text.substr(0, dot);
  const std::string_view digits = text.substr(dot + 2);
  unsigned variant = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), variant);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
    throw ParameterError("bad variant in formula id '" + std::string(text) + "'");
  for (const auto& f : kFamilies) {
    if (f.name != name) continue;
    if (variant < 1 || variant > f.variants) throw ParameterError("unknown variant for " + std::string(name) + ": " + std::string(text));
    return {f.family, variant};
  }
  throw ParameterError("unknown formula family '" + std::string(name) + "'");
}

const std::vector<FormulaId>& all_formula_ids() {
  static const std::vector<FormulaId> ids = [] {
    std::vector<FormulaId> out;
    for (const auto& f : kFamilies)
      for (unsigned v = 1; v <= f.variants; ++v) out.push_back({f.family, v});
    return out;
  }();
  return ids;
}

}  // namespace stirsum

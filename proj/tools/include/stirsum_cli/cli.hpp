// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "stirsum/big_real.hpp"

namespace stirsum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 1;
inline constexpr int kExitNumerical = 2;

inline constexpr const char* kSchemaVersion = "1";
inline constexpr Precision kDefaultPrecision = 256;

// Default precision: STIRLING_SUMS_PREC_BITS when set, else 256.
// Throws ParameterError for a malformed value.
Precision default_precision();

// Digits that the given precision guarantees: floor(bits * log10 2) - 2.
int decimal_digits(Precision bits);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stirsum::cli

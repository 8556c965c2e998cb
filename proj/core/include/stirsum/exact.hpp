// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stirsum {

using BigInt = mpz_class;

// Arbitrary-precision rational kept in canonical form: gcd(|num|, den) == 1
// and den >= 1. Every arithmetic result of mpq_class is canonical; values
// built from raw numerator/denominator pairs go through make_rational.
using ExactRational = mpq_class;

ExactRational make_rational(const BigInt& numerator, const BigInt& denominator);
ExactRational make_rational(long numerator, long denominator = 1);

// Parses "12", "-3.75", "1e-3", "2.5E+2" or "7/3" exactly.
// Throws ParameterError on malformed input.
ExactRational parse_rational(std::string_view text);

BigInt floor(const ExactRational& q);
BigInt ceil(const ExactRational& q);
ExactRational fractional_part(const ExactRational& q);
bool is_integer(const ExactRational& q);

ExactRational pow(const ExactRational& base, unsigned long exponent);
BigInt pow(const BigInt& base, unsigned long exponent);

// Exact decimal rendering when the denominator only has factors 2 and 5,
// otherwise "num/den".
std::string to_string(const ExactRational& q);

}  // namespace stirsum

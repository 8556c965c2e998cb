// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stirsum/big_real.hpp"
#include "stirsum/complex.hpp"
#include "stirsum/exact.hpp"

namespace stirsum {

enum class ConstantId { zeta, zeta_prime, eta, euler_gamma, stieltjes_1, pi, log_two_pi, log_two };

struct ConstantRequest {
  ConstantId id;
  // Argument s of zeta, zeta_prime and eta; ignored otherwise.
  std::optional<ExactRational> parameter;
  Precision precision_bits = 256;
};

// Relative error at most 2^-(precision_bits - 8). Results are cached.
// Throws PoleError for zeta(1) and zeta_prime(1), ParameterError for a
// missing parameter or precision below 64 bits.
BigReal get_constant(const ConstantRequest& req);

// Parses names such as "zeta(3/2)", "zeta_prime(-1)", "eta(1/2)",
// "euler_gamma", "stieltjes_1", "pi", "log_two_pi", "log_two".
// Throws UnknownConstantError.
ConstantRequest parse_constant(const std::string& name, Precision precision_bits);
std::string constant_name(const ConstantRequest& req);

// The constants the catalog consumes, in display order.
std::vector<ConstantRequest> catalog_constants(Precision precision_bits);

// Riemann zeta by Euler-Maclaurin: N = precision/4 + |s| + 10 direct terms,
// then Bernoulli corrections until they fall below 2^-precision relative
// to the running sum, with guard bits covering cancellation for s < 0.
BigReal zeta_em(const BigReal& s, Precision precision_bits);
ComplexReal zeta_em(const ComplexReal& s, Precision precision_bits);

BigReal eta(const BigReal& s, Precision precision_bits);
ComplexReal eta(const ComplexReal& s, Precision precision_bits);

BigReal euler_gamma(Precision precision_bits);
BigReal stieltjes_1(Precision precision_bits);

}  // namespace stirsum

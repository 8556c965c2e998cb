// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "stirsum/big_real.hpp"

namespace stirsum {

using RealFunction = std::function<BigReal(const BigReal&)>;

struct QuadratureOptions {
  BigReal tolerance = BigReal::from_double(1e-30, 128);
  unsigned max_depth = 40;
};

// Adaptive Gauss-Legendre (24 against 48 nodes, bisecting on disagreement)
// over [a, b] at the precision of `a`. Throws QuadratureError when the depth
// budget runs out before the tolerance is met.
BigReal integrate(const RealFunction& f, const BigReal& a, const BigReal& b, const QuadratureOptions& options);

// Same, split at every integer strictly inside (a, b) so that integrands
// built from {t} or floor(t) are smooth on each panel.
BigReal integrate_piecewise(const RealFunction& f, const BigReal& a, const BigReal& b, const QuadratureOptions& options);

}  // namespace stirsum

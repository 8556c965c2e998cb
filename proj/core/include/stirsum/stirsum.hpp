// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "stirsum/big_real.hpp"
#include "stirsum/combinatorics.hpp"
#include "stirsum/complex.hpp"
#include "stirsum/constants.hpp"
#include "stirsum/errors.hpp"
#include "stirsum/exact.hpp"
#include "stirsum/formula_catalog.hpp"
#include "stirsum/formula_id.hpp"
#include "stirsum/oracle.hpp"
#include "stirsum/quadrature.hpp"
#include "stirsum/rational_polynomial.hpp"
#include "stirsum/series_engine.hpp"
#include "stirsum/special_functions.hpp"

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace stirsum {

// Argument outside the mathematical domain of an operation (even n for an
// odd double factorial, x <= 1 for the finite summation engines, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Index outside a finite table.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Request asks for more orders than a precomputed table can serve.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Invalid user-level parameters (formula ids, x <= 0, a == 1, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnknownConstantError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// The combination is well-formed but not supported by this implementation.
class CapabilityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace stirsum

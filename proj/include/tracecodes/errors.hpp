#pragma once

#include <stdexcept>
#include <string>

namespace tracecodes {

// Bad parameters: non-prime p, reducible modulus, mismatched operands.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation would exceed the configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// No closed-form prediction exists for the requested (variant, p, m).
class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Empirical data contradicts a structural expectation (class non-constancy,
// missing dual witness, ...).
class Discrepancy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tracecodes

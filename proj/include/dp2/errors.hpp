#pragma once

#include <stdexcept>
#include <string>

namespace dp2 {

/// Bad user input: malformed label, unsupported q, invalid cycle type.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation was refused because its estimated cost exceeds the budget.
class BudgetExceeded : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// The embedded tables are internally inconsistent.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cross-check between independent computations failed.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was violated (indicates a bug, not bad input).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dp2

#pragma once

#include <stdexcept>
#include <string>

namespace schubert {

/// A precondition on the arguments of an operation was violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Interpolation was handed two samples with the same abscissa.
class DuplicateSample : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A textual matroid specification could not be parsed.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// A brute-force oracle was asked for an instance larger than its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two computations that must agree did not. Always a bug, never bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace schubert

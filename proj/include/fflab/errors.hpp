#pragma once

#include <stdexcept>
#include <string>

namespace fflab {

// Base class for every error thrown by the library.  The CLI maps these to
// process exit codes: ConfigError -> 1, assertion violations -> 2,
// BudgetExceeded -> 3.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero") {}
  using Error::Error;
};

// Quotient of two finite Laurent elements has unbounded support.
struct NonTerminatingQuotient : Error {
  NonTerminatingQuotient() : Error("quotient has no finite-support representation") {}
  using Error::Error;
};

struct SingularMatrix : Error {
  SingularMatrix() : Error("matrix is singular") {}
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct CoincidentPoints : Error {
  CoincidentPoints() : Error("difference quotient requires pairwise distinct points") {}
  using Error::Error;
};

struct RingMismatch : Error {
  using Error::Error;
};

struct ParamError : Error {
  using Error::Error;
};

struct PreconditionFailed : Error {
  using Error::Error;
};

// Enumeration degree box cannot certify completeness within the budget.
struct InsufficientBound : Error {
  using Error::Error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace fflab

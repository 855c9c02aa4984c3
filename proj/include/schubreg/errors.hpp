#pragma once

#include <stdexcept>
#include <string>

namespace schubreg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad permutation text, index out of range, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The pair (v, w) is not ordered v <= w in Bruhat order.
class NotBruhatComparable : public Error {
 public:
  using Error::Error;
};

/// The combinatorial regularity rule was requested for a non-covexillary w.
class FormulaInapplicable : public Error {
 public:
  using Error::Error;
};

/// A Groebner/scan computation exceeded its configured pair or time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed (dimension mismatch, inexact
/// division, non-unique kappa, ...). Always indicates a bug or a convention
/// mismatch, never bad user input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace schubreg

#pragma once

#include <stdexcept>
#include <string>

namespace heckelab {

/// Input outside an operation's domain (bad rank, k > n, missing point polynomial, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact arithmetic failure: division by zero, evaluation at a pole, inexact division.
class ArithmeticError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration would exceed its configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical identity the library relies on did not hold.  Signals an
/// engine bug (or a false theorem), never bad input.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace heckelab

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decomp1d {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid caller input (bad mesh size, unknown problem id, bad rule order).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A coefficient or load evaluated to a non-finite value on some element.
class AssemblyError : public Error {
 public:
  AssemblyError(const std::string& what, std::ptrdiff_t element)
      : Error(what + " (element " + std::to_string(element) + ")"), element_(element) {}

  std::ptrdiff_t element() const noexcept { return element_; }

 private:
  std::ptrdiff_t element_;
};

/// Zero pivot met during tridiagonal elimination.
class SingularSystemError : public Error {
 public:
  SingularSystemError(std::ptrdiff_t row)
      : Error("singular tridiagonal system: zero pivot at row " + std::to_string(row)), row_(row) {}

  std::ptrdiff_t row() const noexcept { return row_; }

 private:
  std::ptrdiff_t row_;
};

/// Logarithm of a non-positive coefficient, or a field evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature failed to meet its tolerance within the subdivision budget.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double estimate, double tolerance)
      : Error(what + ": error estimate " + std::to_string(estimate) + " exceeds tolerance " +
              std::to_string(tolerance)),
        estimate_(estimate),
        tolerance_(tolerance) {}

  double estimate() const noexcept { return estimate_; }
  double tolerance() const noexcept { return tolerance_; }

 private:
  double estimate_;
  double tolerance_;
};

}  // namespace decomp1d

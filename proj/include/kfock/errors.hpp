#pragma once

#include <stdexcept>
#include <string>

namespace kfock {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad syntax, out-of-range index, size mismatch.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A mathematically forbidden evaluation: poles, root-of-unity guards,
/// division by zero, nonzero constant term under exp.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series with different truncation policies or coefficient fields were combined.
class PolicyMismatch : public Error {
 public:
  using Error::Error;
};

/// An enumeration or expansion would exceed a hard cap.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// fixed_point iteration did not raise the t-adic order of the discrepancy.
class ContractionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace kfock

#pragma once

#include <stdexcept>
#include <string>

namespace qito {

/// Argument outside the mathematical domain of an operation
/// (negative factorial, out-of-range magnetic index, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The operation is well defined but deliberately not implemented for this
/// input, e.g. division by a multi-radical sum.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric evaluation hit a zero denominator.
class PoleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element is not in the span of the requested matrix coefficients.
class SpanExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qito

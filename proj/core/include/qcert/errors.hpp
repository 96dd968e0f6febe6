#pragma once

#include <stdexcept>
#include <string>

namespace qcert {

// Bad caller input: malformed JSON, zero coefficients, wrong degree,
// violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Argument outside the domain of a mathematical function (phi with x <= 1).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A coefficient left the representable band [1e-300, 1e300].
class RangeError : public std::range_error {
 public:
  using std::range_error::range_error;
};

// An iterative method did not reach its target (search exhausted,
// non-integer winding accumulation, contour too close to a zero).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qcert

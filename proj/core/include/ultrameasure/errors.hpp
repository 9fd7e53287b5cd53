#pragma once

#include <stdexcept>
#include <string>

namespace ultrameasure {

// Bad argument: foreign element, mismatched domains, non-prime modulus.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A structure failed validation: group axioms, subgroup closure, malformed
// instance files.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical precondition does not hold for otherwise well-formed input
// (zero atom where quasi-invariance is required, zero-mass support, ...).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace ultrameasure

#pragma once

#include <stdexcept>
#include <string>

namespace zmw {

// Argument outside the mathematical domain of a function (pole, x <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// (z, z') violates both admissibility classes, or an operation-specific
// parameter restriction such as |a| < 1/2.
class AdmissibilityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Enumeration or character-sum size guard exceeded.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A quadrature, series or grid refinement failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zmw

#ifndef COCYCLE_ERRORS_HPP
#define COCYCLE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cocycle {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A generator that does not belong to the algebra (t in the Witt algebra).
class InvalidGenerator : public Error {
 public:
  using Error::Error;
};

// Mismatched arity/degree/algebra/module, or a module element outside the module.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// A coboundary generator failed a condition row. Never legitimate.
class InclusionViolation : public Error {
 public:
  using Error::Error;
};

class RecursionGap : public Error {
 public:
  using Error::Error;
};

class ProfileViolation : public Error {
 public:
  using Error::Error;
};

class NotACocycle : public Error {
 public:
  using Error::Error;
};

class ResidualNonZero : public Error {
 public:
  using Error::Error;
};

}  // namespace cocycle

#endif  // COCYCLE_ERRORS_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace spheremax {

// Argument outside the domain of a special function (poles, negative orders).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// An operation's documented precondition was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A Fourier symbol evaluated to a non-finite value at some lattice radius.
class MultiplierError : public std::runtime_error {
 public:
  MultiplierError(const std::string& what, double radius)
      : std::runtime_error(what), radius_(radius) {}
  double radius() const noexcept { return radius_; }

 private:
  double radius_;
};

// Time stepping or quadrature lost accuracy beyond its own estimate.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed grid/exponent files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spheremax

#pragma once

#include <stdexcept>
#include <string>

namespace abshear {

/// Non-finite or otherwise malformed argument.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation outside the region where a formula is defined (r < R, stencil crossing
/// the solenoid, edge angles of the phase integral).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A physical precondition of a computation does not hold for the given configuration.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or unreadable configuration file.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace abshear

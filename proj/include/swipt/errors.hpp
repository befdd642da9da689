#pragma once

#include <stdexcept>

namespace swipt {

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An operation was requested for an unsupported number of relays.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical integrator could not certify the requested accuracy.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A root bracket could not be established for a monotone map.
class BracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace swipt

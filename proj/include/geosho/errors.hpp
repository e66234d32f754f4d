#pragma once

#include <stdexcept>
#include <string>

namespace geosho {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-side contract was violated (wrong dimensions, non-normalized
// state, missing closure, inconsistent sample lengths, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

// Input is outside the mathematical/physical domain of the operation
// (degenerate arc, undefined total phase, coordinate outside the chart,
// oscillation amplitude leaving the validity regime, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A metric (or other matrix) is numerically singular where it must be
// invertible.
class SingularMetricError : public Error {
 public:
  using Error::Error;
};

// Problem size exceeds a documented resource cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A probability/information quantity evaluated to an invalid value
// (negative probability, non-normalized distribution, F <= 0, ...).
class InvalidPathError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (e.g. variance below the roundoff
// floor).  Indicates a bug or catastrophically ill-conditioned input.
class InternalError : public Error {
 public:
  using Error::Error;
};

// Problems with configuration files or command-line arguments.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem problems while reading configs or writing results.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace geosho

#pragma once

#include <stdexcept>
#include <string>

namespace graphsdp {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter violates an operation's precondition.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

// Operand shapes do not agree.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Rejection sampling exceeded its retry cap.
class SamplingFailure : public Error {
 public:
  using Error::Error;
};

// An iterative numerical routine failed to converge or produced non-finite values.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

// Input exceeds a documented desk-scale size cap.
class SizeLimit : public Error {
 public:
  using Error::Error;
};

// A witness construction hit a (probability-zero) degenerate projection row.
class DegenerateProjection : public Error {
 public:
  using Error::Error;
};

// File or serialization format problem.
class IoError : public Error {
 public:
  using Error::Error;
};

// Experiment configuration problem (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace graphsdp

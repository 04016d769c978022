#pragma once

#include <stdexcept>
#include <string>

namespace snop {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad call arguments or malformed inputs (maps to CLI exit code 1).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Factorization failures, non-finite values, division guards (exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Eigenproblem without a usable fission source.
class DegenerateProblem : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// File format, checksum, or version problems.
class IoError : public Error {
 public:
  using Error::Error;
};

// Config file parse or schema violations (exit code 1).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace snop

#pragma once

#include <stdexcept>
#include <string>

namespace hardnet {

// Base class for every error this library raises on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Incompatible tensor shapes. Messages name both shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Input outside the mathematical domain of an operation (sqrt of a
// negative, log of a non-positive) when no clamping policy applies.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition was violated by the caller.
class ContractError : public Error {
 public:
  using Error::Error;
};

// Malformed file contents (bad magic, truncation, count mismatch).
class FormatError : public Error {
 public:
  using Error::Error;
};

// Filesystem-level failure (unreadable, unwritable, missing).
class IoError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value or command-line usage.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hardnet

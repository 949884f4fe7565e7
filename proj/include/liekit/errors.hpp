#pragma once

#include <stdexcept>
#include <string>

namespace liekit {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a mathematical precondition (non-dominant weight,
/// invalid series/rank pair, zero-norm reflection root, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands do not fit together (different weight kinds or dimensions).
class StructuralError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Request is well formed but outside what the library computes.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (algebra names, label lists, JSON).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace liekit

#pragma once

#include <stdexcept>
#include <string>

namespace hypercheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A Pochhammer symbol, reciprocal, or bottom series parameter hit zero.
class PoleError : public Error {
 public:
  using Error::Error;
};

class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class NotTerminating : public Error {
 public:
  using Error::Error;
};

/// Numeric summation cannot reach the requested accuracy within the term budget.
class ConvergenceTooSlow : public Error {
 public:
  using Error::Error;
};

/// Accumulated rounding error exceeded its share of the error budget.
class PrecisionInsufficient : public Error {
 public:
  using Error::Error;
};

class InvalidHypothesis : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypercheck

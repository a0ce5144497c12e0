#pragma once

#include <stdexcept>
#include <string>

namespace kzr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or too close to) a pole or branch locus.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an operation (|v| >= 1, rho = 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A value would require a square root outside Q(sqrt2, sqrt3).
class FieldExtensionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A representation lacks the transposition matrices an operation needs.
class MissingMatrix : public Error {
 public:
  using Error::Error;
};

/// A constructive search (recurrence, quadrature) ran past its bound.
class NonTermination : public Error {
 public:
  using Error::Error;
};

}  // namespace kzr

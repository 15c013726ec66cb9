#pragma once

#include <stdexcept>
#include <string>

namespace f4skein {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
  public:
    using Error::Error;
};

/// Specializing a scalar at a zero of its denominator.
class PoleAtPoint : public Error {
  public:
    using Error::Error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

class NotDominant : public Error {
  public:
    using Error::Error;
};

/// Composition or tensor of diagrams with incompatible boundaries.
class ArityMismatch : public Error {
  public:
    using Error::Error;
};

class IrreducibleDiagram : public Error {
  public:
    using Error::Error;
};

class DerivationFailed : public Error {
  public:
    using Error::Error;
};

class ValidationFailed : public Error {
  public:
    using Error::Error;
};

class NotEigen : public Error {
  public:
    using Error::Error;
};

} // namespace f4skein

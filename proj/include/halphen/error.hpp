#pragma once

#include <stdexcept>
#include <string>

namespace halphen {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of an operation (e.g. a class not in K^perp).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Degree, grading or matrix dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// The input describes a configuration the library does not handle.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A computed object failed one of its verified postconditions.
class PostconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace halphen

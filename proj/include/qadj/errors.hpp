#pragma once

#include <stdexcept>
#include <string>

namespace qadj {

/// Base of every error the engine raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Raised when q is specialized at a pole of a rational function.
class NotSpecializable : public Error {
 public:
  explicit NotSpecializable(const std::string& what) : Error("pole: " + what) {}
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class NotMultihomogeneous : public Error {
 public:
  NotMultihomogeneous() : Error("not multihomogeneous") {}
  using Error::Error;
};

class NotAPoint : public Error {
 public:
  explicit NotAPoint(const std::string& what) : Error("not a C-point: " + what) {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A violated engine invariant; never expected on valid input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace qadj

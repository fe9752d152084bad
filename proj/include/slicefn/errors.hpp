#pragma once

#include <stdexcept>
#include <string>

namespace slicefn {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point or sphere outside the domain of the function being evaluated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Caller-supplied arguments violate a precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Operation is undefined because a normal function vanishes identically.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

// Division by a vanishing quaternion value (e.g. T_f at a zero of f^c).
class SingularError : public Error {
 public:
  using Error::Error;
};

// Floating point breakdown detected by a consistency check.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// Malformed input document. `pointer` is a JSON pointer to the offending node.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string pointer)
      : Error(what + " at " + pointer), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

// Well-formed input that describes an inconsistent object.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace slicefn

#pragma once

#include <stdexcept>
#include <string>

namespace ybco {

// Base of every error raised by the library. Messages are prefixed with
// the module name, e.g. "ring: ...".
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMismatch : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

class Overflow : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

class NotAField : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Invalid user data: malformed quandle tables, inapplicable moves, etc.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Broken internal invariant. Indicates a bug rather than bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace ybco

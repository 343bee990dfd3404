#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bgal {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (x outside [a,b], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Expression text that does not match the grammar. `offset` is a byte offset
/// into the source string.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownIdentifier, NonLiteralExponent };

  ParseError(Kind kind, const std::string& what, std::size_t offset)
      : Error(what + " at offset " + std::to_string(offset)),
        kind_(kind),
        offset_(offset) {}
  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// Expression evaluation failure (division by zero, ln of a non-positive value...).
class EvalError : public Error {
 public:
  EvalError(const std::string& what, double x)
      : Error(what + " at x=" + std::to_string(x)), x_(x) {}
  double x() const noexcept { return x_; }

 private:
  double x_;
};

/// Problem definition that violates a structural invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class AssemblyError : public Error {
 public:
  using Error::Error;
};

class SingularSystemError : public Error {
 public:
  SingularSystemError(const std::string& what, std::size_t pivot)
      : Error(what), pivot_(pivot) {}
  std::size_t pivot_index() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double previous, double last)
      : Error(what), previous_(previous), last_(last) {}
  double previous_distance() const noexcept { return previous_; }
  double last_distance() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace bgal

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace charvar {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent caller input (bad variable lists, non-coprime
/// slopes, unassigned variables, ...). Maps to CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& message, std::size_t line, std::size_t column)
      : InputError(message + " at line " + std::to_string(line) + ", column " +
                   std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource cap (degree, pair count, search bound) was hit.
/// Never accompanied by a partial answer. Maps to CLI exit code 2.
class ResourceCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Independent computations that should agree did not. Maps to exit code 3.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace charvar

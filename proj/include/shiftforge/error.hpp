#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftforge {

// Base for every error raised by the library. The CLI maps subclasses to
// exit codes: ParseError/InvalidInput -> 2, Unsupported -> 3,
// ValidationFailure -> 4.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class ValidationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace shiftforge

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lmc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings or algebras (num_vars, cap, m or c differ).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// An operation was asked of a value outside its domain (e.g. inverting a
// singular linear part, ad-action by an element with a linear part).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Data is well formed syntactically but violates an invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class InternalError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
              ": expected " + expected + ", found " + found),
        line_(line),
        column_(column),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string found_;
};

}  // namespace lmc

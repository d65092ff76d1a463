#pragma once

#include <stdexcept>
#include <string>

namespace ores {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would produce a word longer than the presentation's degree cap.
class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class PresentationMismatch : public Error {
 public:
  PresentationMismatch() : Error("operands belong to different presentations") {}
};

/// Presentation rejected at load time (non-involutive dagger map, non-confluent
/// or non-terminating rules, relations not closed under the involution).
class InvalidPresentation : public Error {
 public:
  using Error::Error;
};

class IrregularDenominator : public Error {
 public:
  using Error::Error;
};

class OreWitnessNotFound : public Error {
 public:
  using Error::Error;
};

class InsufficientDegree : public Error {
 public:
  using Error::Error;
};

class InvalidState : public Error {
 public:
  using Error::Error;
};

class TruncationLimit : public Error {
 public:
  using Error::Error;
};

class InvalidFormula : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based source position and the set of tokens that
/// would have been accepted there.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected,
              const std::string& found)
      : Error("syntax error at " + std::to_string(line) + ":" +
              std::to_string(column) + ": expected " + expected + ", found " +
              found),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

}  // namespace ores

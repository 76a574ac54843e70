#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathloc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the arguments was violated (unknown vertex, mixed
/// coalgebras, malformed path, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The requested object is infinite-dimensional and no cap was supplied,
/// or a cap was too small to decide the question.
class CapacityError : public Error {
 public:
  CapacityError(const std::string& what, std::string witness)
      : Error(what + " (witness: " + witness + ")"), witness_(std::move(witness)) {}
  explicit CapacityError(const std::string& what) : Error(what) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

/// An operation that is only defined under an extra hypothesis was asked
/// for in a context where the hypothesis fails (e.g. H without a
/// colocalizing subcategory).
class UnsupportedContext : public Error {
 public:
  using Error::Error;
};

/// A structural law that must hold by construction failed. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Problem-file syntax error with a 1-based position.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string expected, std::string found)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) +
              ": expected " + expected + ", found " + found),
        line_(line),
        column_(column),
        expected_(std::move(expected)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
};

/// Problem-file semantic error naming the offending token.
class SemanticError : public Error {
 public:
  SemanticError(std::size_t line, std::size_t column, std::string token, const std::string& message)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
              message + " '" + token + "'"),
        line_(line),
        column_(column),
        token_(std::move(token)) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

}  // namespace pathloc

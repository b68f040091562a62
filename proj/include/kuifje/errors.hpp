#pragma once

#include <stdexcept>
#include <string>

namespace kuifje {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Base class of every error raised by the analyzer.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands live over different variable contexts.
class ContextMismatch : public Error {
 public:
  using Error::Error;
};

/// A value falls outside the set an operation is defined on
/// (negative scalar, complement of an entry above 1, malformed kernel row, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PositionedError : public Error {
 public:
  PositionedError(SourcePos pos, const std::string& what)
      : Error(format(pos, what)), pos_(pos), message_(what) {}

  SourcePos pos() const { return pos_; }
  const std::string& message() const { return message_; }

 private:
  static std::string format(SourcePos pos, const std::string& what) {
    if (pos.line <= 0) return what;
    return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + what;
  }

  SourcePos pos_;
  std::string message_;
};

/// Lexical or syntax error in program, datatype, context or loss text.
class SyntaxError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

/// Well-formed text that does not typecheck.
class TypeError : public PositionedError {
 public:
  using PositionedError::PositionedError;
};

}  // namespace kuifje

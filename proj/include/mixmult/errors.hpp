#pragma once

#include <stdexcept>
#include <string>

namespace mixmult {

/// Malformed input, unknown names, precondition violations supplied by a caller.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in a problem file, pinned to a line and column.
class ParseError : public UsageError {
 public:
  ParseError(const std::string& msg, int line, int column)
      : UsageError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An internal mathematical invariant failed. Never legal; signals a bug or bad randomness.
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Random choices failed verification more than the configured number of times.
class GenericityExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define MIXMULT_ASSERT(cond, msg)                                       \
  do {                                                                  \
    if (!(cond)) throw ::mixmult::MathError(std::string("assertion failed: ") + (msg)); \
  } while (false)

}  // namespace mixmult

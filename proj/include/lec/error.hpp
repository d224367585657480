#pragma once

#include <stdexcept>
#include <string>

namespace lec {

enum class ErrorCode {
  kOk = 0,
  kParse,
  kInvalidArgument,
  kPrecondition,
  kBudgetExceeded,
  kPartialColouring,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed graph or colouring text. `line` and `column` are 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(ErrorCode::kParse, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error(ErrorCode::kBudgetExceeded, what) {}
};

[[noreturn]] inline void fail_precondition(const std::string& what) {
  throw Error(ErrorCode::kPrecondition, what);
}

}  // namespace lec

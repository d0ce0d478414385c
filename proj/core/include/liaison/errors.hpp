#ifndef LIAISON_ERRORS_HPP
#define LIAISON_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liaison {

// Precondition or verification failure (CLI exit code 2).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

class RingMismatchError : public PreconditionError {
 public:
  explicit RingMismatchError(const std::string& msg) : PreconditionError(msg) {}
};

// Input text could not be parsed (CLI exit code 3).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// A randomized search ran out of retries (CLI exit code 4).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal invariant violated; indicates a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace liaison

#endif

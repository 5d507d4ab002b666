#pragma once

#include <stdexcept>
#include <string>

namespace querent {

// Grammar-level failure; carries a 1-based line/column position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, int line, int column)
      : std::runtime_error(std::move(message)), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Well-formed syntax with an inadmissible meaning (non-simple role under a
// number restriction, query individual missing from the ABox, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured enumeration or search budget ran out; callers surface this as
// a resource-limit verdict, never as a wrong answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace querent

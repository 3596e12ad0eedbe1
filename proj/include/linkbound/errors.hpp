#pragma once

#include <stdexcept>
#include <string>

namespace linkbound {

/// Parse failure with a 1-based line and column into the input text.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::invalid_argument(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace linkbound

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace xasp {

/// Malformed input text. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line,
                            std::size_t column) {
    if (line == 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a semantic invariant (unsafe variables,
/// overlapping request atoms, unknown categories, ...).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace xasp

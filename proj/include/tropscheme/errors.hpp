#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropscheme {

/// A configured enumeration bound was exceeded; `bound()` names it.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(std::string bound, std::size_t limit)
      : std::runtime_error("resource bound '" + bound + "' exceeded (limit " + std::to_string(limit) + ")"),
        bound_(std::move(bound)),
        limit_(limit) {}
  const std::string& bound() const { return bound_; }
  std::size_t limit() const { return limit_; }

 private:
  std::string bound_;
  std::size_t limit_;
};

/// Malformed input text, with a 1-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input relations do not come from a single tropical polynomial.
class RecoveryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tropscheme

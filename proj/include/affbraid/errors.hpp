#pragma once

#include <stdexcept>
#include <string>

namespace affbraid {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent input values (bad letters, strand mismatch, ...).
class InputError : public Error {
 public:
  explicit InputError(const std::string& msg) : Error(msg) {}
};

/// A configured resource cap was exceeded (for example the summit set cap).
class ResourceLimitError : public Error {
 public:
  explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

/// Geometric tracing failed: coincident points, open loop, or a projection
/// degeneracy that perturbation retries could not resolve.
class TraceError : public Error {
 public:
  explicit TraceError(const std::string& msg) : Error(msg) {}
};

/// Malformed text input; carries a 1-based line/column position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace affbraid

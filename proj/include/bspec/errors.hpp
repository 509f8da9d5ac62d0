#pragma once

#include <stdexcept>
#include <string>

namespace bspec {

/// Input exceeds a hard size limit (dense dimension, exact-arithmetic range).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Argument outside the operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input; carries the 1-based line number when known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                    : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace bspec

#pragma once

#include <stdexcept>
#include <string>

namespace proxcg {

/// Raised when an oracle behaves inconsistently (non-finite values, or the
/// step-size backtracking cannot satisfy its model condition).
class OracleError : public std::runtime_error {
 public:
  explicit OracleError(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format parse failure; carries the 1-based line (or row) number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, long line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace proxcg

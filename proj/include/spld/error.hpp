#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spld {

// Invalid parameter values (out-of-range probabilities, bad node ids, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates an operation's precondition
// (e.g. a disconnected graph handed to the exact oracle).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Degenerate arithmetic: zero weights, nonpositive normalisers.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two data structures that are supposed to describe the same graph disagree.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EstimationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace spld

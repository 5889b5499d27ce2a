#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace setchrome {

// Bad argument values: probabilities outside their range, mismatched lengths,
// invalid permutations. The CLI maps these to exit code 2.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A formula was evaluated outside the region where it has a solution.
class DomainError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

// The constructive colouring needs more vertices than the graph has.
class InfeasibleError : public ParameterError {
 public:
  using ParameterError::ParameterError;
};

class ParseError : public ParameterError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ParameterError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// File could not be opened, read or written. Exit code 3.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace setchrome

#pragma once

#include <stdexcept>
#include <string>

namespace catmouse {

// Bad arguments to a public operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or invalid edge-list text; carries the 1-based line number (0 when
// the error is not tied to a single line, e.g. connectivity).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// A strategy could not be built for the given graph/parameters.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A player broke the game rules (e.g. non-adjacent mouse move).
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(int step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step) {}
  int step() const noexcept { return step_; }

 private:
  int step_;
};

// Belief update produced the empty set.
class IllegalFeedback : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An exhaustive oracle was asked to work on an instance above its size guard.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catmouse

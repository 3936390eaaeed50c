#ifndef CAUSALID_ERROR_HPP
#define CAUSALID_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace causalid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Structurally invalid graph: cycle, self-loop, unknown endpoint, duplicate node.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph file or expression JSON. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke an operation's precondition (overlapping query sets,
/// non-ancestral marginalization set, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Division by a zero probability during evaluation.
class PositivityError : public Error {
 public:
  using Error::Error;
};

/// Exact enumeration would exceed the configured state-space cap.
class StateSpaceError : public Error {
 public:
  using Error::Error;
};

/// Tree expansion of a shared expression is too large to print.
class RenderSizeError : public Error {
 public:
  using Error::Error;
};

}  // namespace causalid

#endif  // CAUSALID_ERROR_HPP

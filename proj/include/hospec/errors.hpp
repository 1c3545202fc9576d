#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hospec {

// Base for every error raised by the library. The CLI maps subclasses to
// exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 input; offset is the 0-based byte position of the fault.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A precondition on the input graph or argument failed (not a tree, odd
// degree where even is required, size out of range, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration hit its configured cap. Results are never
// silently truncated.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what + " (residual " + std::to_string(residual) + ")"), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// Schwenk construction asked to coalesce at similar vertices; the two
// outputs would be isomorphic.
class SimilarPairWarning : public Error {
 public:
  using Error::Error;
};

}  // namespace hospec

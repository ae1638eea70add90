#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace herd {

/// Input outside the domain where a model or formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed text input (Touchstone, design or spec files).  `line()` is
/// 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A synthesis target that no geometry in the design family can meet.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace herd

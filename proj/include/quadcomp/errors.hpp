#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quadcomp {

/// Input that is well-formed but mathematically outside an operation's domain
/// (zero polynomial where a non-zero one is required, u = 0, non-quadrinomial, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in a polynomial or rational literal. `position` is the 0-based
/// byte offset into the input where parsing stopped.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::invalid_argument(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A proven identity or inequality failed to hold on concrete data. Seeing this
/// means there is a bug in the library, not in the caller's input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace quadcomp

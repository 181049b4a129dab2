#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace freemoments {

// Truncated series of different orders were combined.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands live over different variable sets.
class VariableMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structural precondition violated (bad index, constant term where none is allowed, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A brute-force routine refused a request above its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace freemoments

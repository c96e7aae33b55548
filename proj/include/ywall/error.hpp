#pragma once

#include <stdexcept>
#include <string>

namespace ywall {

// Argument outside the domain of an operation (non-dominant weight, invalid
// column, level 0, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Breadth-first enumeration exceeded its node cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structural invariant that the model guarantees did not hold, e.g. an
// operator on a Young wall produced a sequence violating the wall condition.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Malformed JSON or text input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ywall

#pragma once

#include <stdexcept>
#include <string>

namespace woideal {

/// Malformed or invariant-violating input (exit code 2).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was asked for outside the hypotheses it is certified under.
class PreconditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Instance exceeds a configured exact-mode or oracle cap (exit code 3).
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wall-clock budget exhausted (exit code 3).
class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent routes disagreed. Always a bug (exit code 4).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace woideal

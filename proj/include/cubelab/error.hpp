#pragma once

#include <stdexcept>
#include <string>

namespace cubelab {

// Raised on precondition failures. `field()` names the offending input so
// the CLI can report it without parsing the message.
class InvalidArgument : public std::invalid_argument {
 public:
  InvalidArgument(std::string field, const std::string& message);

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Raised when an internal consistency check fails (e.g. a monotone iteration
// goes downhill). Always indicates a bug, never bad input.
class InternalCheckFailed : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cubelab

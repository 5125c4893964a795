#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lpakit {

/// Malformed input or a violated precondition. The CLI maps this to exit 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition that must hold mathematically failed to verify. The CLI
/// maps this to exit 3; it always indicates a bug or a genuine finding.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lpakit

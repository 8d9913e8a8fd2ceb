#ifndef PALAB_ERRORS_HPP
#define PALAB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palab {

// Malformed input text. `pos` is the byte offset of the first offending
// character within the spec string.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
        pos_(pos) {}
  std::size_t pos() const { return pos_; }

private:
  std::size_t pos_;
};

// A stated precondition of an operation does not hold for the given inputs.
class PreconditionError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An object exceeds a configured materialization cap.
class CapExceeded : public PreconditionError {
  using PreconditionError::PreconditionError;
};

// A certificate failed its own validation. Always a bug, never user error.
class ValidationBug : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace palab

#endif

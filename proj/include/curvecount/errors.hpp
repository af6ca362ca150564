#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace curvecount {

/// Caller supplied something outside an operation's domain (bad index,
/// wrong space, malformed constraint).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The query is well formed but asks for something the recursions do not
/// cover (e.g. higher-order tangencies on a cuspidal curve).
class UnsupportedError : public InputError {
 public:
  using InputError::InputError;
};

/// A computed table disagrees with its closed form.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace curvecount

#ifndef LNDT_ERROR_HPP
#define LNDT_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lndt {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed code or value text. `offset()` is the byte offset of the
/// offending character in the input.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, UnknownAlias };

  ParseError(Kind kind, std::size_t offset, const std::string& message)
      : Error("parse error at byte " + std::to_string(offset) + ": " + message),
        kind_(kind),
        offset_(offset) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t offset() const noexcept { return offset_; }

 private:
  Kind kind_;
  std::size_t offset_;
};

/// A path does not address a node of the value, or does not end on an atom.
class PathError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must share an atom sort do not.
class SortMismatchError : public Error {
 public:
  using Error::Error;
};

/// A constructor or generator was given arguments outside its domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation reaches a state that well-formed inputs can
/// never produce (e.g. a Null seed being invoked).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lndt

#endif  // LNDT_ERROR_HPP

#pragma once

#include <stdexcept>
#include <string>

namespace supernil {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input: scalar literals, JSON documents, parameter lists.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

/// Operands live in different cyclotomic fields or different ambient spaces.
struct MismatchError : Error {
  explicit MismatchError(const std::string& what) : Error(what) {}
};

/// Structurally invalid input: bad dimensions, grading violations, singular
/// change-of-basis matrices, out-of-range family parameters.
struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(what) {}
};

/// An operation that requires a nilpotent input was given a non-nilpotent one.
struct NotNilpotentError : Error {
  explicit NotNilpotentError(const std::string& what) : Error(what) {}
};

}  // namespace supernil

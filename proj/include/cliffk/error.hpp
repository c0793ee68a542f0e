#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffk {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A blade mask or generator index does not fit the signature, or two
/// operands live in different algebras.
class SignatureError : public Error {
 public:
  using Error::Error;
};

/// A computation was asked for beyond its configured size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// The small signature does not embed as an initial segment of the big one.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

/// A matrix does not define a homomorphism between the given groups.
class HomomorphismError : public Error {
 public:
  using Error::Error;
};

/// An exact-sequence operation met an unbound placeholder or malformed shape.
class SequenceError : public Error {
 public:
  using Error::Error;
};

/// The enumeration requested by solve_exact exceeds its ceiling.
class SearchSpaceError : public Error {
 public:
  using Error::Error;
};

/// Malformed sequence file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace cliffk

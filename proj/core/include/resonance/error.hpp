#pragma once

#include <stdexcept>
#include <string>

namespace resonance {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input violates a documented precondition (bad parameter, unknown id).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A file could not be read or does not follow its declared format.
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A query that is syntactically broken or that resolves to nothing.
class QueryError : public Error {
 public:
  enum class Reason { kEmpty, kMalformed, kNoResonance, kUnknownSolution };

  QueryError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Short machine-readable code for a QueryError reason.
const char* ReasonCode(QueryError::Reason reason) noexcept;

}  // namespace resonance

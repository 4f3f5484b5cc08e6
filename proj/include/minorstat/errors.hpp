#pragma once

#include <stdexcept>
#include <string>

namespace minorstat {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text: bad characters, ragged rows, empty input,
/// schema violations. The message names the offending row/column when known.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on values or shapes was violated: non-prime Paley
/// parameter, wrong residue class, bad subset indices, out-of-range order.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The requested computation exceeds the configured work cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace minorstat

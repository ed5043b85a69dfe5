#pragma once

#include <stdexcept>
#include <string>

namespace cyclab {

enum class ErrorKind {
  ZeroConstantTerm,
  ParameterOutOfRange,
  NumericalBreakdown,
  DegenerateInput,
  MatchingAmbiguity,
  Parse,
  InvalidArgument,
};

const char* to_string(ErrorKind kind);

// Base for every error raised by the library. The kind lets the CLI map
// failures onto exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Cholesky failure on a Gram matrix. `last_completed` is the largest basis
// size whose solve succeeded, or -1 if none did.
class NumericalBreakdown : public Error {
 public:
  NumericalBreakdown(const std::string& what, int last_completed)
      : Error(ErrorKind::NumericalBreakdown, what),
        last_completed_(last_completed) {}
  int last_completed() const noexcept { return last_completed_; }

 private:
  int last_completed_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NumericalBreakdown: return "NumericalBreakdown";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::MatchingAmbiguity: return "MatchingAmbiguity";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace cyclab

#pragma once

#include <stdexcept>
#include <string>

namespace dejima {

/// Base class for all errors raised by the engine.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error with source position ("line:col: message").
struct ParseError : Error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error(std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

/// Structural problem in a program or strategy: arity clash, unsafe rule,
/// malformed strategy header, undeclared predicate.
struct ValidationError : Error {
  using Error::Error;
};

/// Program admits no stratification (negative cycle).
struct StratifyError : Error {
  using Error::Error;
};

/// Runtime evaluation failure, e.g. a builtin applied across scalar kinds.
struct EvalError : Error {
  using Error::Error;
};

/// Delta inconsistency or strict-mode application failure.
struct DeltaError : Error {
  using Error::Error;
};

/// View-definition derivation failure (no swappable rule, unsupported form,
/// or a violated residual constraint).
struct DerivationError : Error {
  using Error::Error;
};

/// File or serialization problem.
struct IoError : Error {
  using Error::Error;
};

/// Bad topology, script, or CLI configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace dejima

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace signsearch {

// Base of every error this library throws on purpose. Callers that want
// blanket handling (the CLI, the fuzz harness) catch this.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad argument: out-of-range label, overlapping qubits, a == b, ...
class DomainError : public Error {
 public:
  using Error::Error;
};

// Request exceeds a hard enumeration/simulation bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The queried amplitude is indistinguishable from zero; the sign is
// undefined. For the reduction this signals a broken unique-marking
// precondition upstream.
class ZeroAmplitudeError : public Error {
 public:
  using Error::Error;
};

// Sampling estimator ran out of copies before reaching its confidence goal.
class InconclusiveError : public Error {
 public:
  using Error::Error;
};

// Sampling estimator detected that the reference amplitude carries no
// signal (both rotations hit at statistically equal rates).
class BadReferenceError : public Error {
 public:
  using Error::Error;
};

// The oracle fed to the reduction is not uniquely marked.
class MalformedOracleError : public Error {
 public:
  using Error::Error;
};

// Unique-instance generator exhausted its retry budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

// DIMACS input is malformed. `line` is 1-based and points at the offending
// line (for an unterminated clause, the line the clause started on).
class ParseError : public Error {
 public:
  ParseError(std::string message, int line)
      : Error("line " + std::to_string(line) + ": " + std::move(message)),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Input parses as CNF but violates strict 3-SAT mode (clause wider than
// three literals, or a tautological clause).
class Strict3SatError : public ParseError {
 public:
  using ParseError::ParseError;
};

}  // namespace signsearch

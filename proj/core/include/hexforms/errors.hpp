// Error taxonomy shared by the whole library. Every throwing path uses
// HexError so the CLI can map failures onto stable exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace hexforms {

enum class ErrorKind {
  DivisionByZero,
  DegreeZero,
  ArityMismatch,
  BadVolume,
  ParseError,
  JacobiError,
  NotDecomposable,
  ZeroLambda,
  NotDiagonalized,
  NotIntegrable,
  NotMetric,
  AssumptionViolation,
  RingMismatch,
  NotDivisible,
  UnknownId,
  Internal,
};

class HexError : public std::runtime_error {
 public:
  HexError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw HexError(kind, msg);
}

}  // namespace hexforms

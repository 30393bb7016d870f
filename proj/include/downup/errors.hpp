#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace downup {

// Domain failures. Each carries a stable kind name used by the CLI and JSON
// reports; subclasses attach the exact data a caller needs to recover.
enum class ErrorKind {
  NotMonic,
  Reducible,
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  FieldNotSplit,
  BetaZero,
  ParamsMismatch,
  SyntaxError,
  NotSubmoduleBoundary,
  NoZeroWithinBound,
  NotSimple,
  NotAnOrbit,
  RelationFailure,
  EigenvaluesNotInField,
  NotTypeC,
  NotTypeD,
  InternalConsistency,
  InvalidInput,
};

std::string_view kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace downup

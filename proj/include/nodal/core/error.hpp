#pragma once

#include <stdexcept>
#include <string>

namespace nodal {

enum class ErrorKind {
  VariableSetMismatch,
  DomainMismatch,
  IndexOutOfRange,
  ZeroPolynomial,
  DivisionNotExact,
  ExponentOverflow,
  NotPrime,
  BadModulus,
  ReconstructionFailed,
  SingularMatrix,
  // curve-model
  SingularQuartic,
  NotDegree4,
  NotHomogeneous,
  ExplicitGMismatch,
  WrongBidegree,
  ZeroLambda,
  KernelDimensionUnexpected,
  GTildeInSpan,
  NotSymmetric,
  NotInKernel,
  SearchExhausted,
  // relation-solver
  DimensionUnexpected,
  NullspaceDimZero,
  NullspaceDimHigh,
  NotInIdeal,
  ZeroLeadingCoefficient,
  // surface-builder
  OddPowerPresent,
  // verifier
  BadReductionPrime,
  FieldTooLarge,
  PointNotSingular,
  NoSeventhRoot,
  ClosureBudgetExceeded,
  OrderMismatch,
  NotInvariant,
  NoCurvePoints,
  DiscIdenticallyZeroModP,
  // cli
  SyntaxError,
  UnknownVariable,
  NotSextic,
  InvalidConfig,
  Io,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace nodal

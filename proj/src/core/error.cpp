#include "nodal/core/error.hpp"

namespace nodal {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::VariableSetMismatch: return "VariableSetMismatch";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorKind::DivisionNotExact: return "DivisionNotExact";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::BadModulus: return "BadModulus";
    case ErrorKind::ReconstructionFailed: return "ReconstructionFailed";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::SingularQuartic: return "SingularQuartic";
    case ErrorKind::NotDegree4: return "NotDegree4";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::ExplicitGMismatch: return "ExplicitGMismatch";
    case ErrorKind::WrongBidegree: return "WrongBidegree";
    case ErrorKind::ZeroLambda: return "ZeroLambda";
    case ErrorKind::SearchExhausted: return "SearchExhausted";
    case ErrorKind::KernelDimensionUnexpected: return "KernelDimensionUnexpected";
    case ErrorKind::GTildeInSpan: return "GTildeInSpan";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotInKernel: return "NotInKernel";
    case ErrorKind::DimensionUnexpected: return "DimensionUnexpected";
    case ErrorKind::NullspaceDimZero: return "NullspaceDimZero";
    case ErrorKind::NullspaceDimHigh: return "NullspaceDimHigh";
    case ErrorKind::NotInIdeal: return "NotInIdeal";
    case ErrorKind::ZeroLeadingCoefficient: return "ZeroLeadingCoefficient";
    case ErrorKind::OddPowerPresent: return "OddPowerPresent";
    case ErrorKind::BadReductionPrime: return "BadReductionPrime";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::PointNotSingular: return "PointNotSingular";
    case ErrorKind::NoSeventhRoot: return "NoSeventhRoot";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::NotInvariant: return "NotInvariant";
    case ErrorKind::NoCurvePoints: return "NoCurvePoints";
    case ErrorKind::DiscIdenticallyZeroModP: return "DiscIdenticallyZeroModP";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::NotSextic: return "NotSextic";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace nodal

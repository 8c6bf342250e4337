#include "pha/errors.hpp"

namespace pha {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::InvalidUnit: return "InvalidUnit";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::InvalidLocalUnits: return "InvalidLocalUnits";
    case ErrorKind::InvalidGroup: return "InvalidGroup";
    case ErrorKind::HopfAxiomViolation: return "HopfAxiomViolation";
    case ErrorKind::HopfMismatch: return "HopfMismatch";
    case ErrorKind::NonUnitalAlgebra: return "NonUnitalAlgebra";
    case ErrorKind::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorKind::NoAntipodeInverse: return "NoAntipodeInverse";
    case ErrorKind::NotCentralIdempotent: return "NotCentralIdempotent";
    case ErrorKind::ProjectionIdentityFails: return "ProjectionIdentityFails";
    case ErrorKind::SubsystemHypothesisFails: return "SubsystemHypothesisFails";
    case ErrorKind::NotCocommutative: return "NotCocommutative";
    case ErrorKind::ActionUnverified: return "ActionUnverified";
    case ErrorKind::WellDefinednessFails: return "WellDefinednessFails";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::MissingProjections: return "MissingProjections";
    case ErrorKind::CosetConditionFails: return "CosetConditionFails";
    case ErrorKind::CharacteristicDividesOrder: return "CharacteristicDividesOrder";
    case ErrorKind::SpecInvalid: return "SpecInvalid";
    case ErrorKind::ContextUnverified: return "ContextUnverified";
    case ErrorKind::MiddleMismatch: return "MiddleMismatch";
    case ErrorKind::NotCategorizable: return "NotCategorizable";
    case ErrorKind::InvalidCategory: return "InvalidCategory";
    case ErrorKind::NotUnitalModule: return "NotUnitalModule";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace pha

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pha {

enum class ErrorKind {
  FieldMismatch,
  DimMismatch,
  DivisionByZero,
  NotAssociative,
  InvalidUnit,
  InvalidModule,
  InvalidLocalUnits,
  InvalidGroup,
  HopfAxiomViolation,
  HopfMismatch,
  NonUnitalAlgebra,
  HypothesisUnmet,
  NoAntipodeInverse,
  NotCentralIdempotent,
  ProjectionIdentityFails,
  SubsystemHypothesisFails,
  NotCocommutative,
  ActionUnverified,
  WellDefinednessFails,
  NotSymmetric,
  MissingProjections,
  CosetConditionFails,
  CharacteristicDividesOrder,
  SpecInvalid,
  ContextUnverified,
  MiddleMismatch,
  NotCategorizable,
  InvalidCategory,
  NotUnitalModule,
  InvalidArgument,
  ParseError,
  InternalInvariant,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

}  // namespace pha

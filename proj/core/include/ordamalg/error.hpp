#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ordamalg {

enum class ErrorCode {
  ParseError,
  InvalidStructure,
  InvalidArgument,
  MapNotInjective,
  ImageOutsideTarget,
  IntersectionMismatch,
  NameCollision,
  InvalidTriple,
  OperationConflict,
  ElementInC,
  NotLinearInputs,
  MultipleOps,
  NotBijective,
  PhiNotFunction,
  PhiNotOrderIso,
  MultipleCenters,
  CenterExists,
  NotAligned,
  NoCommonCenter,
  SizeCapExceeded,
  BoundsExceeded,
  UnknownName,
  UnknownSymbol,
  CarrierOverlap,
  ClassNotAmalgamable,
  UnsupportedClass,
  ConstructionFailed,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ordamalg

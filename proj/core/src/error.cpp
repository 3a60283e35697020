#include "ordamalg/error.hpp"

namespace ordamalg {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidStructure: return "InvalidStructure";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MapNotInjective: return "MapNotInjective";
    case ErrorCode::ImageOutsideTarget: return "ImageOutsideTarget";
    case ErrorCode::IntersectionMismatch: return "IntersectionMismatch";
    case ErrorCode::NameCollision: return "NameCollision";
    case ErrorCode::InvalidTriple: return "InvalidTriple";
    case ErrorCode::OperationConflict: return "OperationConflict";
    case ErrorCode::ElementInC: return "ElementInC";
    case ErrorCode::NotLinearInputs: return "NotLinearInputs";
    case ErrorCode::MultipleOps: return "MultipleOps";
    case ErrorCode::NotBijective: return "NotBijective";
    case ErrorCode::PhiNotFunction: return "PhiNotFunction";
    case ErrorCode::PhiNotOrderIso: return "PhiNotOrderIso";
    case ErrorCode::MultipleCenters: return "MultipleCenters";
    case ErrorCode::CenterExists: return "CenterExists";
    case ErrorCode::NotAligned: return "NotAligned";
    case ErrorCode::NoCommonCenter: return "NoCommonCenter";
    case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorCode::BoundsExceeded: return "BoundsExceeded";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::CarrierOverlap: return "CarrierOverlap";
    case ErrorCode::ClassNotAmalgamable: return "ClassNotAmalgamable";
    case ErrorCode::UnsupportedClass: return "UnsupportedClass";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace ordamalg

#include "realh1/error.hpp"

namespace realh1 {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotInvolution: return "NotInvolution";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::NotAPoint2: return "NotAPoint2";
    case ErrorCode::PairingNotTwo: return "PairingNotTwo";
    case ErrorCode::ReflectionNotClosed: return "ReflectionNotClosed";
    case ErrorCode::UnmatchedNegatives: return "UnmatchedNegatives";
    case ErrorCode::NotABase: return "NotABase";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CutoffExceeded: return "CutoffExceeded";
    case ErrorCode::NotInvariant: return "NotInvariant";
    case ErrorCode::NotCorootStable: return "NotCorootStable";
    case ErrorCode::FundamentalityViolation: return "FundamentalityViolation";
    case ErrorCode::NotCommuting: return "NotCommuting";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::NotWeylElement: return "NotWeylElement";
    case ErrorCode::StabilizerNotCommuting: return "StabilizerNotCommuting";
    case ErrorCode::InconsistentCocycle: return "InconsistentCocycle";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
  }
  return "Unknown";
}

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::DecompositionFailure:
    case ErrorCode::StabilizerNotCommuting:
    case ErrorCode::InternalInconsistency:
      return true;
    default:
      return false;
  }
}

}  // namespace realh1

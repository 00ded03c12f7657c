#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace realh1 {

enum class ErrorCode {
  // lattices
  NonSquare,
  NotInvolution,
  DecompositionFailure,
  NotAPoint2,
  // root data
  PairingNotTwo,
  ReflectionNotClosed,
  UnmatchedNegatives,
  NotABase,
  IndexOutOfRange,
  CutoffExceeded,
  NotInvariant,
  // real forms
  NotCorootStable,
  FundamentalityViolation,
  NotCommuting,
  NotEffective,
  NotWeylElement,
  StabilizerNotCommuting,
  InconsistentCocycle,
  ShapeMismatch,
  // computation limits
  DimensionTooLarge,
  // input documents
  SchemaError,
  // anything that contradicts a proven identity
  InternalInconsistency,
};

std::string_view error_code_name(ErrorCode code);

/// Whether an error signals a bug or a broken internal invariant rather than bad input.
bool is_internal(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Thrown by weyl_elements and friends; carries how many elements were found.
class CutoffExceeded : public Error {
 public:
  CutoffExceeded(std::size_t reached, std::size_t cutoff)
      : Error(ErrorCode::CutoffExceeded,
              "group enumeration exceeded cutoff " + std::to_string(cutoff) +
                  " (reached " + std::to_string(reached) + " elements)"),
        reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace realh1

#pragma once

#include <stdexcept>
#include <string>

namespace elasto {

enum class ErrorCode {
  kStrongConvexityViolated,
  kInvalidFrequency,
  kInvalidDimension,
  kDimensionMismatch,
  kGridTooCoarse,
  kInsufficientSamples,
  kMeshMismatch,
  kMeshTooCoarse,
  kChartInvalid,
  kSingleComponent,
  kCoincidentPoints,
  kNonpositiveArgument,
  kInvalidParameter,
  kUnsupportedDimension,
  kBumpNotVanishing,
  kSeriesDiverges,
  kSingularSystem,
  kOutOfRegime,
  kInvalidDirection,
  kTauTooSmall,
  kNonOrthonormalPair,
  kNonDecaying,
  kInvalidCurvatures,
  kBoundaryConditionViolated,
  kQuadratureBudgetExceeded,
  kKTooSmall,
  kDegenerateModuli,
  kInvalidExponent,
  kExponentOutOfRange,
  kDegenerateContrast,
  kNoRoot,
  kIncompleteInputs,
  kEmptySweep,
  kConfigInvalid,
};

const char* to_string(ErrorCode code);

/// All recoverable failures in the library are reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace elasto

#include "elasto/error.hpp"

namespace elasto {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kStrongConvexityViolated: return "StrongConvexityViolated";
    case ErrorCode::kInvalidFrequency: return "InvalidFrequency";
    case ErrorCode::kInvalidDimension: return "InvalidDimension";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kInsufficientSamples: return "InsufficientSamples";
    case ErrorCode::kMeshMismatch: return "MeshMismatch";
    case ErrorCode::kMeshTooCoarse: return "MeshTooCoarse";
    case ErrorCode::kChartInvalid: return "ChartInvalid";
    case ErrorCode::kSingleComponent: return "SingleComponent";
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kNonpositiveArgument: return "NonpositiveArgument";
    case ErrorCode::kInvalidParameter: return "InvalidParameter";
    case ErrorCode::kUnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::kBumpNotVanishing: return "BumpNotVanishing";
    case ErrorCode::kSeriesDiverges: return "SeriesDiverges";
    case ErrorCode::kSingularSystem: return "SingularSystem";
    case ErrorCode::kOutOfRegime: return "OutOfRegime";
    case ErrorCode::kInvalidDirection: return "InvalidDirection";
    case ErrorCode::kTauTooSmall: return "TauTooSmall";
    case ErrorCode::kNonOrthonormalPair: return "NonOrthonormalPair";
    case ErrorCode::kNonDecaying: return "NonDecaying";
    case ErrorCode::kInvalidCurvatures: return "InvalidCurvatures";
    case ErrorCode::kBoundaryConditionViolated: return "BoundaryConditionViolated";
    case ErrorCode::kQuadratureBudgetExceeded: return "QuadratureBudgetExceeded";
    case ErrorCode::kKTooSmall: return "KTooSmall";
    case ErrorCode::kDegenerateModuli: return "DegenerateModuli";
    case ErrorCode::kInvalidExponent: return "InvalidExponent";
    case ErrorCode::kExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorCode::kDegenerateContrast: return "DegenerateContrast";
    case ErrorCode::kNoRoot: return "NoRoot";
    case ErrorCode::kIncompleteInputs: return "IncompleteInputs";
    case ErrorCode::kEmptySweep: return "EmptySweep";
    case ErrorCode::kConfigInvalid: return "ConfigInvalid";
  }
  return "Unknown";
}

}  // namespace elasto

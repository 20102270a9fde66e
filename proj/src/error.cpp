#include "symforms/error.hpp"

namespace symforms {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ImaginaryPartTooSmall: return "ImaginaryPartTooSmall";
    case ErrorCode::DegeneratePoint: return "DegeneratePoint";
    case ErrorCode::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ResidualZDependence: return "ResidualZDependence";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::WeightHypothesisViolated: return "WeightHypothesisViolated";
    case ErrorCode::WeightTooSmall: return "WeightTooSmall";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InsufficientOrder: return "InsufficientOrder";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::CacheCorrupt: return "CacheCorrupt";
    case ErrorCode::AssertionFailure: return "AssertionFailure";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace symforms

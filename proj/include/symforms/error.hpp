#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace symforms {

enum class ErrorCode {
  ImaginaryPartTooSmall,
  DegeneratePoint,
  UnsupportedWeight,
  SingularMatrix,
  ResidualZDependence,
  RankMismatch,
  WeightMismatch,
  NotInImage,
  WeightHypothesisViolated,
  WeightTooSmall,
  DepthExceeded,
  IndexOutOfRange,
  InsufficientOrder,
  UnknownName,
  CacheCorrupt,
  AssertionFailure,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symforms

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framescale {

enum class ErrorCode {
  DimensionTooSmall,
  NotUnitNorm,
  NotPSD,
  BadDiagonal,
  TooFewVectors,
  DimensionMismatch,
  EmptyMatrix,
  EmptySubset,
  NotSpanning,
  NotAScaling,
  NotDisjoint,
  TooLarge,
  CoverNotFound,
  Schema,
  Io,
  Internal,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotUnitNorm: return "NotUnitNorm";
    case ErrorCode::NotPSD: return "NotPSD";
    case ErrorCode::BadDiagonal: return "BadDiagonal";
    case ErrorCode::TooFewVectors: return "TooFewVectors";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::NotSpanning: return "NotSpanning";
    case ErrorCode::NotAScaling: return "NotAScaling";
    case ErrorCode::NotDisjoint: return "NotDisjoint";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::CoverNotFound: return "CoverNotFound";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace framescale

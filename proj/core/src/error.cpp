#include "hodge/error.hpp"

namespace hodge {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::MissingFace: return "MissingFace";
    case ErrorCode::DuplicateSimplex: return "DuplicateSimplex";
    case ErrorCode::OrientationError: return "OrientationError";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::NonpositiveScale: return "NonpositiveScale";
    case ErrorCode::NotSimplicialMap: return "NotSimplicialMap";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConsistencyViolation: return "ConsistencyViolation";
    case ErrorCode::InconsistentSpectra: return "InconsistentSpectra";
    case ErrorCode::EndpointTooCloseToSpectrum: return "EndpointTooCloseToSpectrum";
    case ErrorCode::SiteDimensionMismatch: return "SiteDimensionMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::WindowTouchesSpectrum: return "WindowTouchesSpectrum";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::EigenvalueNotSimple: return "EigenvalueNotSimple";
    case ErrorCode::WindowPollution: return "WindowPollution";
    case ErrorCode::DegenerateOverlap: return "DegenerateOverlap";
    case ErrorCode::GuardViolated: return "GuardViolated";
    case ErrorCode::RefinementBudgetExceeded: return "RefinementBudgetExceeded";
    case ErrorCode::GapCollapsedOnLoop: return "GapCollapsedOnLoop";
    case ErrorCode::NoCertificate: return "NoCertificate";
    case ErrorCode::BoundaryDegeneracy: return "BoundaryDegeneracy";
    case ErrorCode::VolumeBudgetExceeded: return "VolumeBudgetExceeded";
    case ErrorCode::TargetsTooClose: return "TargetsTooClose";
    case ErrorCode::NonConvergence: return "NonConvergence";
  }
  return "Unknown";
}

bool is_certificate_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NoCertificate:
    case ErrorCode::BoundaryDegeneracy:
    case ErrorCode::GuardViolated:
    case ErrorCode::GapCollapsedOnLoop:
    case ErrorCode::RefinementBudgetExceeded:
    case ErrorCode::NonConvergence:
    case ErrorCode::ConsistencyViolation:
    case ErrorCode::VolumeBudgetExceeded:
    case ErrorCode::WindowPollution:
    case ErrorCode::DegenerateOverlap:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace hodge

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hodge {

enum class ErrorCode {
  // complex construction and degree bookkeeping
  MissingFace,
  DuplicateSimplex,
  OrientationError,
  DegreeOutOfRange,
  InvalidWeights,
  NonpositiveScale,
  NotSimplicialMap,
  InvalidArgument,
  ParseError,
  // spectral bookkeeping
  ConsistencyViolation,
  InconsistentSpectra,
  EndpointTooCloseToSpectrum,
  // gluing
  SiteDimensionMismatch,
  DegreeMismatch,
  WindowTouchesSpectrum,
  UnsupportedDegree,
  EigenvalueNotSimple,
  // diabolo
  WindowPollution,
  DegenerateOverlap,
  GuardViolated,
  RefinementBudgetExceeded,
  GapCollapsedOnLoop,
  NoCertificate,
  BoundaryDegeneracy,
  VolumeBudgetExceeded,
  // prescription
  TargetsTooClose,
  NonConvergence,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for failures of a topological certificate or of a numerical search
/// whose inputs were well formed. The CLI maps these to exit status 2.
bool is_certificate_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hodge

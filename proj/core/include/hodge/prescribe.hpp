#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "hodge/certificates.hpp"
#include "hodge/weights.hpp"

namespace hodge {

struct TargetSpectrum {
  std::map<int, std::vector<double>> targets;  // degree -> sorted values
  double volume = 1.0;
  double tol = 1e-3;
  double ceiling = 10.0;

  double max_target() const;
};

/// Throws TargetsTooClose when a value repeats more than twice in a degree or
/// two distinct values are within 100 tol of each other; InvalidArgument for
/// nonpositive values, volume or tolerance, or a ceiling not above the targets.
void validate(const TargetSpectrum& t);

/// {"targets": {"1": [...]}, "volume": V, "tol": t, "ceiling": C}. Values are
/// sorted; ParseError on malformed input.
TargetSpectrum target_spectrum_from_json(const nlohmann::json& j);

struct PrescribeOptions {
  int n = 3;
  double epsilon = 0.2;
  std::vector<double> u_candidates{1e-2, 1e-3, 1e-4};
  int max_iterations = 50;
};

struct PrescribedDouble {
  double value = 0.0;
  Degeneracy degeneracy;
};

struct PrescribeChecks {
  std::vector<double> achieved;  // first N coexact eigenvalues
  double next = 0.0;             // eigenvalue N+1
  double max_deviation = 0.0;
  double volume = 0.0;
  bool targets_ok = false;
  bool ceiling_ok = false;
  bool volume_ok = false;
  bool doubles_ok = false;
  bool passed() const { return targets_ok && ceiling_ok && volume_ok && doubles_ok; }
};

struct PrescribeResult {
  WeightedComplex metric;
  int iterations = 0;
  std::vector<double> deviation_history;
  std::vector<PrescribedDouble> doubles;
  double u = 0.0;
  PrescribeChecks checks;
};

/// Independent check of a prescribed metric against the targets.
PrescribeChecks verify_prescription(const WeightedComplex& m, const TargetSpectrum& t);

/// Glues one tuned dumbbell per simple target and one certified pair per
/// double target to the base, then retunes until every target is met.
/// Throws TargetsTooClose, UnsupportedDegree (degrees other than 1),
/// NonConvergence, VolumeBudgetExceeded; propagates NoCertificate.
PrescribeResult prescribe_spectrum(const WeightedComplex& base, const TargetSpectrum& t,
                                   const PrescribeOptions& opt = {});

nlohmann::json prescription_report(const PrescribeResult& r, const TargetSpectrum& t);

}  // namespace hodge

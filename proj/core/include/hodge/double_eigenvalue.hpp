#pragma once

#include <vector>

#include "hodge/certificates.hpp"
#include "hodge/family.hpp"
#include "hodge/weights.hpp"

namespace hodge {

struct DoubleEigenvalueOptions {
  int n = 3;
  double epsilon = 0.2;
  double theta_offset = 0.0;
  std::vector<double> u_candidates{1e-2, 1e-3, 1e-4};
  int max_epsilon_halvings = 6;
  int max_origin_shifts = 3;  // each shift moves the θ origin by π/4
};

struct DoubleEigenvalueChecks {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double mu3 = 0.0;
  std::vector<std::pair<int, double>> other_degrees;  // (q, mu_{q,1})
  double volume = 0.0;
  bool double_ok = false;
  bool third_ok = false;
  bool other_ok = false;
  bool volume_ok = false;
  bool passed() const { return double_ok && third_ok && other_ok && volume_ok; }
};

struct DoubleEigenvalueResult {
  WeightedComplex metric;
  Degeneracy degeneracy;
  int holonomy = 0;
  double u = 0.0;
  double epsilon = 0.0;
  double theta_offset = 0.0;
  int origin_shifts = 0;
  double final_scale = 0.0;
  DoubleEigenvalueChecks checks;
};

/// Recomputes the four assertions from scratch on (k, w).
DoubleEigenvalueChecks verify_double_eigenvalue(const WeightedComplex& m, int p, int n, double nu, double ceiling,
                                                double volume);

/// Builds a metric whose coexact p-spectrum starts with a double eigenvalue
/// nu, followed by eigenvalues above C, with volume below V. Throws
/// InvalidArgument unless 0 < nu < C and V > 0; propagates NoCertificate;
/// throws VolumeBudgetExceeded when the volume cannot be kept below V.
DoubleEigenvalueResult double_eigenvalue_metric(const WeightedComplex& base, int p, double nu, double ceiling,
                                                double volume, const DoubleEigenvalueOptions& opt = {});

}  // namespace hodge

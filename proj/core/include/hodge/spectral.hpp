#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hodge/cochain_complex.hpp"
#include "hodge/weights.hpp"

namespace hodge {

/// Eigenvalues within this (relative) distance are treated as one cluster.
inline constexpr double kClusterTol = 1e-10;
/// Tolerance for multiset comparisons, relative to the spectral radius.
inline constexpr double kSpectrumTol = 1e-9;
/// Minimal distance between a window endpoint and the spectrum.
inline constexpr double kWindowMargin = 1e-8;

struct Eigenpairs {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, symmetrized coordinates
};

/// Full spectrum of the degree-p Laplacian, ascending.
Eigen::VectorXd full_spectrum(const CochainComplex& k, const WeightSystem& w, int p);
Eigenpairs full_eigenpairs(const CochainComplex& k, const WeightSystem& w, int p);

struct CoexactSpectrum {
  int degree = 0;
  Eigen::VectorXd values;    // ascending, positive
  Eigen::MatrixXd vectors;   // symmetrized coordinates, orthonormal
  Eigen::MatrixXd cochains;  // W^{-1/2} vectors: W-orthonormal coexact eigencochains

  std::size_t size() const noexcept { return static_cast<std::size_t>(values.size()); }
};

/// Nonzero eigenvalues of the up part in degree p. Their number is the exact
/// rank of d_p, so tiny eigenvalues are never mistaken for zeros.
/// Throws DegreeOutOfRange unless 0 <= p <= top degree (top gives an empty set).
CoexactSpectrum coexact_spectrum(const CochainComplex& k, const WeightSystem& w, int p, bool with_vectors = true);

struct ConsistencyReport {
  int degree = 0;
  double max_deviation = 0.0;  // absolute
  double tolerance = 0.0;      // kSpectrumTol * spectral radius
  std::size_t kernel_dim = 0;  // numerically zero eigenvalues
  int betti = 0;               // from exact ranks
  double offending = 0.0;      // eigenvalue with the largest deviation
  bool passed = false;
};

/// Checks nonzero spec(L_p) = coex_{p-1} ⊎ coex_p and dim ker L_p = b_p.
ConsistencyReport consistency_report(const CochainComplex& k, const WeightSystem& w, int p);
/// As above but throws ConsistencyViolation on failure.
ConsistencyReport hodge_consistency(const CochainComplex& k, const WeightSystem& w, int p);

/// Recovers coexact spectra from full spectra and Betti numbers, degree by
/// degree. Throws InconsistentSpectra when a subtraction is impossible.
std::vector<Eigen::VectorXd> coexact_from_full(const std::vector<Eigen::VectorXd>& full, const std::vector<int>& betti,
                                               double tol = kSpectrumTol);

struct SpectralWindow {
  int degree = 0;
  double lo = 0.0;
  double hi = 0.0;
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  Eigen::MatrixXd cochains;
};

/// Coexact eigenpairs with eigenvalue in the open interval (lo, hi). Throws
/// InvalidArgument when lo >= hi and EndpointTooCloseToSpectrum when an
/// endpoint is within kWindowMargin of a coexact eigenvalue.
SpectralWindow spectral_window(const CochainComplex& k, const WeightSystem& w, int p, double lo, double hi);
SpectralWindow window_of(const CoexactSpectrum& s, double lo, double hi);

/// Groups of nearly equal eigenvalues as (first index, count).
std::vector<std::pair<std::size_t, std::size_t>> clusters(const Eigen::VectorXd& sorted, double tol = kClusterTol);

/// Sorted multiset union.
Eigen::VectorXd merge_sorted(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace hodge

#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "hodge/quadratic_form.hpp"

namespace hodge {

struct ParamPoint {
  double lambda2 = 0.0;
  double theta = 0.0;
};

struct FamilySample {
  QuadraticForm2 form;
  /// Lower eigenvector in a fixed ambient space, used for transport. When
  /// empty, the lower eigenvector of `form` is used.
  Eigen::VectorXd lower;
};

using FamilyEvaluator = std::function<FamilySample(const ParamPoint&)>;

/// D = [lambda_lo, lambda_hi] x [theta_lo, theta_hi] with corners
/// t0 = (hi, lo), t1 = (lo, lo), t2 = (lo, hi), t3 = (hi, hi); the boundary
/// loop runs t0 -> t1 -> t2 -> t3 -> t0.
struct DomainRect {
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  double theta_lo = 0.0;
  double theta_hi = 0.0;

  static DomainRect around(double lambda1, double eta);  // theta in [0, pi]
  ParamPoint corner(int i) const;
  std::vector<ParamPoint> boundary() const;
  ParamPoint center() const;
  double diameter() const;
  double eta() const { return 0.5 * (lambda_hi - lambda_lo); }
};

struct LoopOptions {
  int samples_per_edge = 64;
  double guard = -1.0;  // negative: 1e-6 times the half lambda-extent of the loop
  int max_depth = 40;
  std::size_t max_evaluations = 200000;
};

/// Winding number of (x, y) around the origin along the closed polyline.
/// Throws GuardViolated and RefinementBudgetExceeded.
int loop_winding(const FamilyEvaluator& f, const std::vector<ParamPoint>& loop, const LoopOptions& opt = {});

struct HolonomyOptions {
  int samples_per_edge = 64;
  double gap_floor = 1e-8;
  double min_overlap = 0.5;  // steps with a smaller overlap are bisected
  int max_depth = 40;
  std::size_t max_evaluations = 200000;
};

/// Sign picked up by the lower eigenvector transported around the loop.
/// Throws GapCollapsedOnLoop and RefinementBudgetExceeded.
int eigenline_holonomy(const FamilyEvaluator& f, const std::vector<ParamPoint>& loop, const HolonomyOptions& opt = {});

struct DegeneracyOptions {
  double tol = 1e-4;          // stop once the cell diameter is below this
  double gap_tol = -1.0;      // negative: 1e-8 * eta
  double guard = -1.0;        // on the boundary of D; negative: 1e-6 * eta
  int boundary_samples = 64;  // per edge of D
  int cell_samples = 8;       // per edge of sub-rectangles
  int max_retries = 5;
  int max_depth = 80;
  std::size_t max_evaluations = 400000;
};

struct QuadrisectionStep {
  int parent = 0;
  std::array<int, 4> children{};
  int chosen = 0;
  int retries = 0;
};

struct Degeneracy {
  ParamPoint point;
  double double_value = 0.0;
  double gap = 0.0;
  int winding = 0;  // on the boundary of D
  DomainRect cell;  // final rectangle
  std::vector<QuadrisectionStep> steps;
  std::size_t evaluations = 0;
};

/// Winding-guided quadrisection. Inside D a sample whose gap is below gap_tol
/// ends the search. Once the cell is below tol, Newton steps on (x, y) inside
/// that cell refine the point. Throws NoCertificate when the boundary
/// winding is zero and BoundaryDegeneracy when a boundary or split line keeps
/// passing too close to a degeneracy.
Degeneracy find_degeneracy(const FamilyEvaluator& f, const DomainRect& d, const DegeneracyOptions& opt = {});

struct TransversalityReport {
  bool weak = false;
  bool strong = false;
  int winding = 0;
  Eigen::Matrix2d jacobian = Eigen::Matrix2d::Zero();  // in coordinates normalized by the half-widths of D
  Eigen::Vector2d singular_values = Eigen::Vector2d::Zero();
  double scale = 0.0;
};

/// weak: boundary winding is nonzero. strong: the smallest singular value of
/// the central-difference Jacobian of (x, y) at `a` exceeds 1e-6 times the
/// larger of |J| and the secant slope from `a` to the corners of D.
TransversalityReport transversality_report(const FamilyEvaluator& f, const DomainRect& d, const ParamPoint& a,
                                           int boundary_winding);
TransversalityReport transversality_report(const FamilyEvaluator& f, const DomainRect& d, const ParamPoint& a);

}  // namespace hodge

#pragma once

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "hodge/certificates.hpp"
#include "hodge/dumbbell.hpp"
#include "hodge/gluing.hpp"
#include "hodge/quadratic_form.hpp"

namespace hodge {

/// Ring multipliers 1 + amplitude cos(2πk/m), normalized to sum 1, rotated by
/// theta: the profile moves by theta m / 2π sites, interpolating linearly.
std::vector<double> ring_profile(int m, double theta, double amplitude = 0.9);

struct SystemConfig {
  int n = 3;
  int p = 1;
  double u = 1e-3;
  double epsilon = 0.2;
  double amplitude = 0.9;
};

/// Tuning of one gadget: homothety placing its small eigenvalue at `lambda`,
/// and the rotation of its attachment profile.
struct GadgetTuning {
  double lambda = 1.0;
  double theta = 0.0;
};

/// A base complex with several copies of one dumbbell gadget attached, each
/// through its ring sites to one base p-simplex. The combinatorics is fixed;
/// weights depend on the tunings.
class GluedSystem {
 public:
  GluedSystem(WeightedComplex base, const SystemConfig& cfg, std::vector<Simplex> base_sites);

  const SystemConfig& config() const noexcept { return cfg_; }
  const DumbbellGadget& gadget() const noexcept { return gadget_; }
  /// Small coexact eigenvalue of the untuned gadget.
  double gadget_mu() const noexcept { return gadget_mu_; }
  std::size_t gadget_count() const noexcept { return sites_.size(); }
  const WeightedComplex& base() const noexcept { return base_; }
  const GluingLayout& layout() const noexcept { return layout_; }
  const SimplicialComplex& complex() const noexcept { return layout_.complex(); }

  /// Replaces the base weights (e.g. volume adjustment or perturbation).
  void set_base_weights(WeightSystem w);

  /// Homothety factor that places the gadget's small eigenvalue at lambda.
  double tuning_scale(double lambda) const;
  WeightSystem gadget_weights(double lambda) const;
  WeightSystem weights(const std::vector<GadgetTuning>& tunings) const;
  WeightedComplex complex_at(const std::vector<GadgetTuning>& tunings) const;

  /// Small eigencochain of gadget g in symmetrized coordinates for `w`, unit
  /// norm, with a sign fixed once per system.
  Eigen::VectorXd reference(std::size_t g, const WeightSystem& w) const;

  /// The gadget involution acting on copy g, identity elsewhere.
  VertexMap half_turn(std::size_t g) const;

 private:
  SystemConfig cfg_;
  WeightedComplex base_;
  DumbbellGadget gadget_;
  double gadget_mu_ = 0.0;
  Eigen::VectorXd gadget_mode_;  // cochain on the untuned gadget
  std::vector<Simplex> sites_;
  GluingLayout layout_;
};

/// q = P diag(mu) P^T with P the orthogonal polar factor of R^T Φ, where R
/// holds the reference vectors and Φ the window eigenvectors (symmetrized
/// coordinates, orthonormal columns). q does not depend on the signs of the
/// columns of Φ. Throws DegenerateOverlap when R^T Φ is nearly singular.
QuadraticForm2 effective_form(const Eigen::MatrixXd& window_vectors, const Eigen::Vector2d& mu,
                              const Eigen::MatrixXd& reference, double min_overlap = 0.1);

/// Same, computing the two-dimensional coexact window (lo, hi) of (k, w) in
/// degree p. reference_cochains are W-orthonormal cochains. Throws
/// WindowPollution unless exactly two eigenvalues lie in the window.
QuadraticForm2 effective_form(const CochainComplex& k, const WeightSystem& w, int p, double lo, double hi,
                              const Eigen::MatrixXd& reference_cochains);

struct FamilyParams {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double theta = 0.0;
  double epsilon = 0.2;
  double eta = 0.2;
  int degree = 1;
  double window_lo = 0.5;
  double window_hi = 1.5;
};

struct FamilyConfig {
  SystemConfig system;
  double lambda1 = 1.0;
  double eta = 0.2;
  double window_lo = 0.5;
  double window_hi = 1.5;
  /// Added to theta before rotating the second profile (moves the θ origin).
  double theta_offset = 0.0;
  /// Base p-simplices for the two gadgets; empty means the first p-simplex.
  Simplex site1;
  Simplex site2;
};

struct WindowEigen {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;  // symmetrized coordinates
};

/// The two-parameter family (lambda2, theta): gadget `first` tuned to lambda1,
/// gadget `second` tuned to lambda2 with its profile rotated by theta, every
/// other gadget of the system held at its own tuning.
class GluedFamily {
 public:
  GluedFamily(WeightedComplex base, const FamilyConfig& cfg);
  GluedFamily(std::shared_ptr<const GluedSystem> system, std::vector<GadgetTuning> tunings, std::size_t first,
              std::size_t second, double lambda1, double eta, double window_lo, double window_hi,
              double theta_offset = 0.0);

  const GluedSystem& system() const noexcept { return *system_; }
  std::shared_ptr<const GluedSystem> shared_system() const noexcept { return system_; }
  DomainRect domain() const { return DomainRect::around(lambda1_, eta_); }
  double lambda1() const noexcept { return lambda1_; }
  double eta() const noexcept { return eta_; }
  double window_lo() const noexcept { return lo_; }
  double window_hi() const noexcept { return hi_; }
  double theta_offset() const noexcept { return theta_offset_; }
  FamilyParams params(const ParamPoint& a) const;

  std::vector<GadgetTuning> tunings(const ParamPoint& a) const;
  WeightSystem weights(const ParamPoint& a) const;
  WeightedComplex complex_at(const ParamPoint& a) const;
  /// Coexact eigenpairs of degree p inside the window, any count.
  WindowEigen window(const ParamPoint& a) const;
  /// Throws WindowPollution unless the window holds exactly two eigenvalues.
  FamilySample evaluate(const ParamPoint& a) const;
  FamilyEvaluator evaluator() const;

  /// Weight-preserving automorphism taking the complex at (lambda2, theta)
  /// to the one at (lambda2, theta + pi).
  VertexMap conjugacy() const { return system_->half_turn(second_); }

 private:
  std::shared_ptr<const GluedSystem> system_;
  std::vector<GadgetTuning> base_tunings_;
  std::size_t first_ = 0;
  std::size_t second_ = 1;
  double lambda1_ = 1.0;
  double eta_ = 0.2;
  double lo_ = 0.5;
  double hi_ = 1.5;
  double theta_offset_ = 0.0;
};

/// Octahedron boundary scaled so that its coexact spectrum in degree p starts
/// at `floor` (n gives the homothety exponents).
WeightedComplex scaled_octahedron(int n, int p, double floor);

}  // namespace hodge

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hodge/cochain_complex.hpp"
#include "hodge/simplicial_complex.hpp"

namespace hodge {

/// One strictly positive weight per cell, grouped by degree. The weights are
/// the diagonal of the cochain inner product.
class WeightSystem {
 public:
  WeightSystem() = default;
  /// Throws InvalidWeights when sizes do not match `k` or a weight is not
  /// finite and positive.
  WeightSystem(const CochainComplex& k, std::vector<Eigen::VectorXd> w);

  static WeightSystem unit(const CochainComplex& k);

  int top_degree() const noexcept { return static_cast<int>(w_.size()) - 1; }
  const Eigen::VectorXd& operator[](int p) const;
  const std::vector<Eigen::VectorXd>& all() const noexcept { return w_; }

  /// Total vertex mass: the squared norm of the constant function.
  double volume() const;

 private:
  friend WeightSystem scale_degree(const WeightSystem& w, int p, double factor);
  std::vector<Eigen::VectorXd> w_;
};

/// w_p <- c^{n-2p} w_p. Eigenvalues of every Laplacian scale by c^{-2} and the
/// volume by c^n. Throws NonpositiveScale.
WeightSystem homothety(const WeightSystem& w, double c, int n);

/// Multiplies the degree-p weights by `factor` and leaves the rest alone.
WeightSystem scale_degree(const WeightSystem& w, int p, double factor);

struct WeightedComplex {
  SimplicialComplex complex;
  WeightSystem weights;
};

inline WeightedComplex with_unit_weights(SimplicialComplex k) {
  WeightSystem w = WeightSystem::unit(k);
  return {std::move(k), std::move(w)};
}

}  // namespace hodge

#pragma once

#include <Eigen/Dense>

#include "hodge/cochain_complex.hpp"
#include "hodge/weights.hpp"

namespace hodge {

/// B_p = W_{p+1}^{1/2} d_p W_p^{-1/2}, dense. For p == top this is 0 x dim(p);
/// for p == -1 it is dim(0) x 0.
Eigen::MatrixXd weighted_coboundary(const CochainComplex& k, const WeightSystem& w, int p);

/// Symmetrized Hodge Laplacian S_p = W^{1/2} L_p W^{-1/2} split into its up
/// part B_p^T B_p and down part B_{p-1} B_{p-1}^T.
class HodgeOperator {
 public:
  HodgeOperator(int degree, Eigen::MatrixXd up, Eigen::MatrixXd down)
      : degree_(degree), up_(std::move(up)), down_(std::move(down)) {}

  int degree() const noexcept { return degree_; }
  const Eigen::MatrixXd& up() const noexcept { return up_; }
  const Eigen::MatrixXd& down() const noexcept { return down_; }
  Eigen::MatrixXd matrix() const { return up_ + down_; }

 private:
  int degree_;
  Eigen::MatrixXd up_;
  Eigen::MatrixXd down_;
};

/// Throws DegreeOutOfRange unless 0 <= p <= top degree.
HodgeOperator laplacian(const CochainComplex& k, const WeightSystem& w, int p);

/// Unsymmetrized L_p acting on a cochain: W^{-1/2} S_p W^{1/2}.
Eigen::VectorXd apply_laplacian(const CochainComplex& k, const WeightSystem& w, int p, const Eigen::VectorXd& cochain);

}  // namespace hodge

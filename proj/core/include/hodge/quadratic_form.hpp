#pragma once

#include <Eigen/Dense>

namespace hodge {

/// Symmetric 2x2 form in a fixed reference frame. Its eigenvalues are
/// tau/2 ± sqrt(x^2 + y^2), so it is degenerate exactly when (x, y) = 0.
class QuadraticForm2 {
 public:
  QuadraticForm2() : q_(Eigen::Matrix2d::Zero()) {}
  explicit QuadraticForm2(const Eigen::Matrix2d& q) : q_(0.5 * (q + q.transpose())) {}
  static QuadraticForm2 from_coordinates(double x, double y, double trace);

  const Eigen::Matrix2d& matrix() const noexcept { return q_; }
  double x() const noexcept { return 0.5 * (q_(0, 0) - q_(1, 1)); }
  double y() const noexcept { return q_(0, 1); }
  double trace() const noexcept { return q_(0, 0) + q_(1, 1); }
  double radius() const noexcept;  // sqrt(x^2 + y^2), half the gap
  Eigen::Vector2d eigenvalues() const noexcept;  // ascending
  Eigen::Vector2d lower_vector() const noexcept;

 private:
  Eigen::Matrix2d q_;
};

}  // namespace hodge

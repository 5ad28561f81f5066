#include "hodge/quadratic_form.hpp"

#include <cmath>

namespace hodge {

QuadraticForm2 QuadraticForm2::from_coordinates(double x, double y, double trace) {
  Eigen::Matrix2d q;
  q << 0.5 * trace + x, y, y, 0.5 * trace - x;
  return QuadraticForm2(q);
}

double QuadraticForm2::radius() const noexcept { return std::hypot(x(), y()); }

Eigen::Vector2d QuadraticForm2::eigenvalues() const noexcept {
  const double r = radius();
  return {0.5 * trace() - r, 0.5 * trace() + r};
}

Eigen::Vector2d QuadraticForm2::lower_vector() const noexcept {
  // eigenvector of [[x, y], [y, -x]] for -r, written as a half-angle rotation
  const double phi = std::atan2(y(), x());
  return {-std::sin(0.5 * phi), std::cos(0.5 * phi)};
}

}  // namespace hodge

#pragma once

#include <Eigen/Dense>

#include "hodge/weights.hpp"

namespace hodge {

struct SubspaceDistance {
  double distance = 0.0;
  bool dimension_mismatch = false;
};

/// Orthonormal basis (Euclidean) for the column span of `m`; columns that are
/// numerically dependent are dropped.
Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& m);

/// Sine of the largest principal angle between span(E) and span(F), both
/// given by orthonormal columns. With unequal dimensions the smaller space is
/// measured against the larger and the mismatch is flagged.
SubspaceDistance subspace_distance(const Eigen::MatrixXd& e, const Eigen::MatrixXd& f);

/// Same, for spans of degree-p cochains measured in the W inner product.
SubspaceDistance subspace_distance(const WeightSystem& w, int p, const Eigen::MatrixXd& e_cochains,
                                   const Eigen::MatrixXd& f_cochains);

}  // namespace hodge

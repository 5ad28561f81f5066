#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hodge/certificates.hpp"
#include "hodge/gluing.hpp"
#include "hodge/weights.hpp"

namespace hodge::testing {

/// Octahedron with two degree-p dumbbells (u) attached at distinct base
/// sites, uniform profiles, epsilon = 1 (scaled per scan).
std::pair<WeightedComplex, std::vector<GluePart>> two_gadget_fixture(int p, double u);

/// The same, glued at `eps`.
WeightedComplex two_gadget_complex(int p, double u, double eps);

struct Named {
  std::string name;
  WeightedComplex complex;
};

/// Small complexes covering every module: plain fixtures, reweighted ones,
/// dumbbells and glued complexes.
std::vector<Named> consistency_fixtures();

/// (x, y) = A (lambda2 - c.lambda2, theta - c.theta) + curvature terms,
/// trace 2 * value.
struct SyntheticCone {
  ParamPoint center;
  Eigen::Matrix2d a = Eigen::Matrix2d::Identity();
  double curvature = 0.0;
  double value = 1.0;
  FamilyEvaluator evaluator() const;
};

/// Multiset equality of two sorted vectors within an absolute tolerance.
bool same_multiset(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol);

Eigen::VectorXd vec(std::initializer_list<double> v);

}  // namespace hodge::testing

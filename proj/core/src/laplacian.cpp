#include "hodge/laplacian.hpp"

#include <string>

#include "hodge/error.hpp"

namespace hodge {

Eigen::MatrixXd weighted_coboundary(const CochainComplex& k, const WeightSystem& w, int p) {
  if (p < -1 || p > k.top_degree()) {
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(p));
  }
  if (p == -1) return Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k.dim(0)), 0);
  const auto rows = static_cast<Eigen::Index>(k.dim(p + 1));
  const auto cols = static_cast<Eigen::Index>(k.dim(p));
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(rows, cols);
  if (rows == 0) return b;
  const Eigen::VectorXd lhs = w[p + 1].cwiseSqrt();
  const Eigen::VectorXd rhs = w[p].cwiseSqrt().cwiseInverse();
  const Incidence& d = k.coboundary(p);
  for (Eigen::Index c = 0; c < d.outerSize(); ++c) {
    for (Incidence::InnerIterator it(d, c); it; ++it) {
      b(it.row(), it.col()) = lhs[it.row()] * it.value() * rhs[it.col()];
    }
  }
  return b;
}

HodgeOperator laplacian(const CochainComplex& k, const WeightSystem& w, int p) {
  if (p < 0 || p > k.top_degree()) {
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(p));
  }
  const Eigen::MatrixXd b = weighted_coboundary(k, w, p);
  const Eigen::MatrixXd bm = weighted_coboundary(k, w, p - 1);
  Eigen::MatrixXd up = b.transpose() * b;
  Eigen::MatrixXd down = bm * bm.transpose();
  return {p, std::move(up), std::move(down)};
}

Eigen::VectorXd apply_laplacian(const CochainComplex& k, const WeightSystem& w, int p, const Eigen::VectorXd& cochain) {
  const HodgeOperator op = laplacian(k, w, p);
  const Eigen::VectorXd s = w[p].cwiseSqrt();
  return (op.matrix() * (s.asDiagonal() * cochain)).cwiseQuotient(s);
}

}  // namespace hodge

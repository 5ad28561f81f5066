#include "hodge/subspace.hpp"

#include <algorithm>

#include "hodge/error.hpp"

namespace hodge {

Eigen::MatrixXd orthonormalize(const Eigen::MatrixXd& m) {
  if (m.cols() == 0) return m;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cut = 1e-12 * std::max(1.0, s.size() ? s[0] : 0.0);
  Eigen::Index r = 0;
  while (r < s.size() && s[r] > cut) ++r;
  return svd.matrixU().leftCols(r);
}

SubspaceDistance subspace_distance(const Eigen::MatrixXd& e, const Eigen::MatrixXd& f) {
  if (e.rows() != f.rows() && e.cols() > 0 && f.cols() > 0) {
    throw Error(ErrorCode::InvalidArgument, "subspaces live in different ambient spaces");
  }
  SubspaceDistance out;
  out.dimension_mismatch = e.cols() != f.cols();
  if (e.cols() == 0 && f.cols() == 0) return out;
  if (e.cols() == 0 || f.cols() == 0) {
    out.distance = 1.0;
    return out;
  }
  const Eigen::MatrixXd& small = e.cols() <= f.cols() ? e : f;
  const Eigen::MatrixXd& large = e.cols() <= f.cols() ? f : e;
  const Eigen::MatrixXd resid = small - large * (large.transpose() * small);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(resid);
  out.distance = std::min(1.0, svd.singularValues()[0]);
  return out;
}

SubspaceDistance subspace_distance(const WeightSystem& w, int p, const Eigen::MatrixXd& e_cochains,
                                   const Eigen::MatrixXd& f_cochains) {
  const Eigen::VectorXd s = w[p].cwiseSqrt();
  return subspace_distance(orthonormalize(s.asDiagonal() * e_cochains), orthonormalize(s.asDiagonal() * f_cochains));
}

}  // namespace hodge

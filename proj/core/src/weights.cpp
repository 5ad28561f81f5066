#include "hodge/weights.hpp"

#include <cmath>
#include <string>

#include "hodge/error.hpp"

namespace hodge {

WeightSystem::WeightSystem(const CochainComplex& k, std::vector<Eigen::VectorXd> w) : w_(std::move(w)) {
  if (static_cast<int>(w_.size()) != k.top_degree() + 1) {
    throw Error(ErrorCode::InvalidWeights, "expected weights for degrees 0.." + std::to_string(k.top_degree()));
  }
  for (int p = 0; p <= k.top_degree(); ++p) {
    const auto& v = w_[static_cast<std::size_t>(p)];
    if (static_cast<std::size_t>(v.size()) != k.dim(p)) {
      throw Error(ErrorCode::InvalidWeights, "degree " + std::to_string(p) + " has " + std::to_string(v.size()) +
                                                 " weights for " + std::to_string(k.dim(p)) + " cells");
    }
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      if (!std::isfinite(v[i]) || v[i] <= 0.0) {
        throw Error(ErrorCode::InvalidWeights,
                    "weight " + std::to_string(v[i]) + " at degree " + std::to_string(p) + ", index " + std::to_string(i));
      }
    }
  }
}

WeightSystem WeightSystem::unit(const CochainComplex& k) {
  std::vector<Eigen::VectorXd> w;
  for (int p = 0; p <= k.top_degree(); ++p) w.push_back(Eigen::VectorXd::Ones(static_cast<Eigen::Index>(k.dim(p))));
  WeightSystem out;
  out.w_ = std::move(w);
  return out;
}

const Eigen::VectorXd& WeightSystem::operator[](int p) const {
  if (p < 0 || p > top_degree()) throw Error(ErrorCode::DegreeOutOfRange, "no weights in degree " + std::to_string(p));
  return w_[static_cast<std::size_t>(p)];
}

double WeightSystem::volume() const { return w_.empty() ? 0.0 : w_[0].sum(); }

WeightSystem homothety(const WeightSystem& w, double c, int n) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(ErrorCode::NonpositiveScale, "scale " + std::to_string(c));
  WeightSystem out = w;
  for (int p = 0; p <= w.top_degree(); ++p) {
    out = scale_degree(out, p, std::pow(c, n - 2 * p));
  }
  return out;
}

WeightSystem scale_degree(const WeightSystem& w, int p, double factor) {
  if (!(factor > 0.0) || !std::isfinite(factor)) throw Error(ErrorCode::NonpositiveScale, "factor " + std::to_string(factor));
  if (p < 0 || p > w.top_degree()) throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(p));
  WeightSystem out = w;
  out.w_[static_cast<std::size_t>(p)] *= factor;
  return out;
}

}  // namespace hodge

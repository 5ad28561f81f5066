#include "hodge/cochain.hpp"

#include <cmath>
#include <string>

#include "hodge/error.hpp"

namespace hodge {

double inner(const WeightSystem& w, const Cochain& a, const Cochain& b) {
  if (a.degree != b.degree) throw Error(ErrorCode::DegreeMismatch, "inner product across degrees");
  const auto& wp = w[a.degree];
  if (a.values.size() != wp.size() || b.values.size() != wp.size()) {
    throw Error(ErrorCode::InvalidArgument, "cochain length does not match the complex");
  }
  return (wp.array() * a.values.array() * b.values.array()).sum();
}

Cochain coboundary(const CochainComplex& k, const Cochain& c) {
  if (static_cast<std::size_t>(c.values.size()) != k.dim(c.degree)) {
    throw Error(ErrorCode::InvalidArgument, "cochain length does not match the complex");
  }
  const Eigen::SparseMatrix<double> d = k.coboundary(c.degree).cast<double>();
  return {c.degree + 1, d * c.values};
}

SignedPermutation induced_permutation(const SimplicialComplex& k, const VertexMap& f, int p) {
  const auto& list = k.simplices(p);
  SignedPermutation out;
  out.target.resize(list.size());
  out.sign.resize(list.size());
  std::vector<bool> hit(list.size(), false);
  for (std::size_t i = 0; i < list.size(); ++i) {
    Simplex image;
    for (int v : list[i]) {
      auto it = f.find(v);
      image.push_back(it == f.end() ? v : it->second);
    }
    auto [sorted, sign] = sort_with_sign(image);
    auto j = sign == 0 ? std::nullopt : k.find(sorted);
    if (!j || hit[*j]) {
      throw Error(ErrorCode::NotSimplicialMap, "image of " + std::to_string(p) + "-simplex " + std::to_string(i) +
                                                   " is not a distinct simplex");
    }
    hit[*j] = true;
    out.target[i] = *j;
    out.sign[i] = sign;
  }
  return out;
}

Cochain pullback(const SimplicialComplex& k, const VertexMap& f, const Cochain& phi) {
  if (static_cast<std::size_t>(phi.values.size()) != k.dim(phi.degree)) {
    throw Error(ErrorCode::InvalidArgument, "cochain length does not match the complex");
  }
  const auto perm = induced_permutation(k, f, phi.degree);
  Cochain out{phi.degree, Eigen::VectorXd(phi.values.size())};
  for (std::size_t i = 0; i < perm.target.size(); ++i) {
    out.values[static_cast<Eigen::Index>(i)] = perm.sign[i] * phi.values[static_cast<Eigen::Index>(perm.target[i])];
  }
  return out;
}

VertexMap compose(const VertexMap& f, const VertexMap& g) {
  VertexMap out;
  auto apply = [](const VertexMap& m, int v) {
    auto it = m.find(v);
    return it == m.end() ? v : it->second;
  };
  for (const auto& [v, gv] : g) out[v] = apply(f, gv);
  for (const auto& [v, fv] : f) {
    if (!g.count(v)) out[v] = fv;
  }
  return out;
}

bool preserves_weights(const SimplicialComplex& k, const WeightSystem& w, const VertexMap& f, double tol) {
  for (int p = 0; p <= k.top_dim(); ++p) {
    const auto perm = induced_permutation(k, f, p);
    const auto& wp = w[p];
    for (std::size_t i = 0; i < perm.target.size(); ++i) {
      const double a = wp[static_cast<Eigen::Index>(i)];
      const double b = wp[static_cast<Eigen::Index>(perm.target[i])];
      if (std::abs(a - b) > tol * std::max(std::abs(a), std::abs(b))) return false;
    }
  }
  return true;
}

}  // namespace hodge

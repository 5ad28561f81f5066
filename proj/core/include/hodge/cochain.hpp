#pragma once

#include <map>
#include <vector>

#include <Eigen/Dense>

#include "hodge/simplicial_complex.hpp"
#include "hodge/weights.hpp"

namespace hodge {

struct Cochain {
  int degree = 0;
  Eigen::VectorXd values;
};

/// <a, b>_W = sum_σ w(σ) a(σ) b(σ). Throws DegreeMismatch or InvalidArgument.
double inner(const WeightSystem& w, const Cochain& a, const Cochain& b);

/// d_p applied to a p-cochain.
Cochain coboundary(const CochainComplex& k, const Cochain& c);

/// A vertex map; vertices absent from the map are fixed.
using VertexMap = std::map<int, int>;

/// Signed permutation of the p-simplices induced by a vertex map:
/// f(σ_i) = sign[i] * σ_{target[i]}.
struct SignedPermutation {
  std::vector<std::size_t> target;
  std::vector<int> sign;
};

/// Throws NotSimplicialMap unless f sends p-simplices bijectively onto p-simplices.
SignedPermutation induced_permutation(const SimplicialComplex& k, const VertexMap& f, int p);

/// (f^*φ)(σ) = sign(f, σ) φ(f(σ)).
Cochain pullback(const SimplicialComplex& k, const VertexMap& f, const Cochain& phi);

VertexMap compose(const VertexMap& f, const VertexMap& g);  // (f∘g)(v) = f(g(v))

/// True when f maps every simplex to a simplex of equal weight.
bool preserves_weights(const SimplicialComplex& k, const WeightSystem& w, const VertexMap& f, double tol = 0.0);

}  // namespace hodge

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hodge/cochain_complex.hpp"

namespace hodge {

/// Strictly increasing vertex tuple; the order is the orientation.
using Simplex = std::vector<int>;

/// Oriented simplicial complex with signed incidence d_j[σ, τ] = (-1)^i when
/// τ is σ with its i-th vertex removed.
class SimplicialComplex : public CochainComplex {
 public:
  SimplicialComplex() = default;

  /// simplices[j] lists the j-simplices. Throws OrientationError for tuples
  /// that are not strictly increasing, DuplicateSimplex and MissingFace.
  static SimplicialComplex build(std::vector<std::vector<Simplex>> simplices);

  /// Adds every missing face of the given simplices, then builds.
  static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

  int top_dim() const noexcept { return top_degree(); }
  const std::vector<Simplex>& simplices(int j) const;
  std::optional<std::size_t> find(const Simplex& s) const;
  std::size_t index(const Simplex& s) const;  // throws MissingFace
  std::vector<int> vertices() const;

 private:
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, std::size_t>> lookup_;
};

/// Canonical sorted form of a vertex set and the sign of the sorting permutation.
std::pair<Simplex, int> sort_with_sign(Simplex s);

}  // namespace hodge

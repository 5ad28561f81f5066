#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <Eigen/SparseCore>

namespace hodge {

/// Signed integer incidence matrix. Rows index (p+1)-cells, columns p-cells.
using Incidence = Eigen::SparseMatrix<int>;

/// A finite graded cochain complex C^0 -> C^1 -> ... -> C^n over the integers.
///
/// Cells of each degree are indexed 0..dim(p)-1. The coboundary d_p maps
/// C^p to C^{p+1}; d_{p+1} d_p = 0 is checked exactly on construction.
/// Ranks of the coboundaries are computed lazily (exact arithmetic modulo a
/// 31-bit prime) and cached; the cache is shared between copies.
class CochainComplex {
 public:
  CochainComplex() = default;
  CochainComplex(std::vector<std::size_t> dims, std::vector<Incidence> coboundaries);

  /// Highest degree with a cell slot; -1 for the empty complex.
  int top_degree() const noexcept { return static_cast<int>(dims_.size()) - 1; }

  /// Number of p-cells, zero outside [0, top_degree()].
  std::size_t dim(int p) const noexcept;

  /// d_p as a dim(p+1) x dim(p) matrix. For p == top_degree() this is 0 x dim(p).
  const Incidence& coboundary(int p) const;

  /// rank of d_p; zero outside the valid range.
  std::size_t rank(int p) const;

  /// b_p = dim(p) - rank(d_p) - rank(d_{p-1}).
  int betti(int p) const;
  std::vector<int> betti_numbers() const;

 private:
  std::vector<std::size_t> dims_;
  std::vector<Incidence> d_;
  struct RankCache;
  std::shared_ptr<RankCache> ranks_;
};

/// Rank of an integer matrix, computed by sparse elimination modulo 2^31 - 1.
std::size_t integer_rank(const Incidence& m);

}  // namespace hodge

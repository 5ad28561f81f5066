#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hodge/cochain.hpp"
#include "hodge/spectral.hpp"
#include "hodge/weights.hpp"

namespace hodge {

/// A base simplex and a part simplex of equal dimension. Vertices correspond
/// position by position, so the tuples need not be sorted.
struct SitePair {
  Simplex base;
  Simplex part;
};

struct AttachmentSpec {
  std::vector<SitePair> sites;
  double epsilon = 0.0;
  std::vector<double> profile;  // one multiplier per site, summing to 1
};

struct GluePart {
  WeightedComplex body;
  AttachmentSpec spec;
};

/// Combinatorics of a base complex with parts attached through prism
/// connectors. Each site pair spans the prism triangulation
/// [b_0..b_i, t_i..t_k], and every face mixing both sides is a connector cell.
/// Weights are assembled separately so that a family can reuse one layout.
class GluingLayout {
 public:
  GluingLayout(const SimplicialComplex& base, const std::vector<const SimplicialComplex*>& parts,
               const std::vector<std::vector<SitePair>>& sites);

  const SimplicialComplex& complex() const noexcept { return glued_; }
  std::size_t part_count() const noexcept { return blocks_.size() - 1; }

  /// Block 0 is the base, block i+1 is part i.
  int vertex(std::size_t block, int v) const;
  const std::vector<std::size_t>& simplex_map(std::size_t block, int degree) const;

  /// Connector cell j of site s of part i gets eps[i] * profile[i][s] *
  /// sqrt(a_j b_j), with a_j and b_j the mean weights of j-cells incident to
  /// the site on either side. Contributions of several sites add up.
  WeightSystem weights(const WeightSystem& base, const std::vector<const WeightSystem*>& parts,
                       const std::vector<double>& eps, const std::vector<std::vector<double>>& profiles) const;

  /// Extends a block cochain by zero.
  Eigen::VectorXd embed(std::size_t block, int degree, const Eigen::VectorXd& cochain) const;

  /// Transports a vertex map of one block to the glued complex.
  VertexMap lift(std::size_t block, const VertexMap& f) const;

 private:
  struct Block {
    std::vector<int> vertices;                    // sorted original labels
    int offset = 0;
    std::vector<std::vector<std::size_t>> maps;  // per degree: local index -> glued index
  };
  struct Contribution {
    std::size_t part;
    std::size_t site;
    int degree;
    std::size_t cell;  // glued index
  };
  struct SiteCells {
    // incident cells per degree, local indices
    std::vector<std::vector<std::size_t>> base_side;
    std::vector<std::vector<std::size_t>> part_side;
    std::size_t base_site = 0;
    std::size_t part_site = 0;
    int dim = 0;
  };

  std::vector<Block> blocks_;
  std::vector<std::vector<SiteCells>> site_cells_;
  std::vector<Contribution> contributions_;
  SimplicialComplex glued_;
};

struct Attachment {
  GluingLayout layout;
  WeightedComplex result;
};

/// Disjoint union of base and parts plus connector cells. Sites with zero
/// profile, and every site when epsilon is 0, are left out. Throws
/// SiteDimensionMismatch and InvalidArgument.
Attachment attach(const WeightedComplex& base, const std::vector<GluePart>& parts);

/// Sorted multiset union. Throws DegreeMismatch.
Eigen::VectorXd union_spectrum(const std::vector<CoexactSpectrum>& parts);

struct ScanRow {
  double eps = 0.0;
  std::size_t index = 0;  // 1-based
  double mu = 0.0;
  double deviation = 0.0;
  double subspace_distance = 0.0;
};

struct ScanOptions {
  int degree = 0;
  std::vector<double> eps;  // strictly decreasing, positive
  std::size_t count = 5;
  double window_lo = 0.0;
  double window_hi = 0.0;
};

/// For each epsilon: |mu_i(eps) - mu'_i| for i <= count, where mu' is the
/// union of the parts' coexact spectra completed by zeros for the modes the
/// connectors kill (sum of the pieces' b_p minus b_p of the glued complex),
/// and the distance between the glued window subspace and the decoupled one.
/// Throws WindowTouchesSpectrum when an eigenvalue sits on or crosses the window.
std::vector<ScanRow> convergence_scan(const WeightedComplex& base, const std::vector<GluePart>& parts,
                                      const ScanOptions& opt);

}  // namespace hodge

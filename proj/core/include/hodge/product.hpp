#pragma once

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hodge/cochain_complex.hpp"
#include "hodge/weights.hpp"

namespace hodge {

/// Graded tensor product of two weighted cochain complexes:
/// C^r = sum over p+q=r of C^p(A) ⊗ C^q(B), d(a⊗b) = da⊗b + (-1)^p a⊗db,
/// weights multiply.
class ProductComplex : public CochainComplex {
 public:
  struct Cell {
    int p = 0;  // degree in the first factor
    std::size_t i = 0;
    std::size_t j = 0;
  };

  ProductComplex(const CochainComplex& a, const WeightSystem& wa, const CochainComplex& b, const WeightSystem& wb);

  const WeightSystem& weights() const noexcept { return w_; }
  const std::vector<Cell>& cells(int r) const;
  /// Index of the cell (p, i, j) inside degree p+q.
  std::size_t index(int p, std::size_t i, int q, std::size_t j) const;
  /// u ⊗ v placed in degree p+q (zero elsewhere).
  Eigen::VectorXd tensor(int p, const Eigen::VectorXd& u, int q, const Eigen::VectorXd& v) const;

 private:
  ProductComplex(std::pair<std::vector<std::size_t>, std::vector<Incidence>> parts, std::vector<std::vector<Cell>> cells,
                 std::vector<std::vector<std::size_t>> offsets, std::vector<std::size_t> dims_b,
                 std::vector<Eigen::VectorXd> weights);
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::vector<std::size_t>> offsets_;  // offsets_[r][p]: first index of the (p, r-p) block
  std::vector<std::size_t> dims_b_;
  WeightSystem w_;
};

ProductComplex product_complex(const CochainComplex& a, const WeightSystem& wa, const CochainComplex& b,
                               const WeightSystem& wb);

struct KunnethSpectrum {
  int degree = 0;
  std::vector<Eigen::VectorXd> full;     // degrees 0..degree
  std::vector<Eigen::VectorXd> coexact;  // degrees 0..degree
  std::vector<int> betti;                // degrees 0..degree
};

/// Product spectra from factor data: full_r is every sum λ + μ with
/// λ ∈ spec L_p(A), μ ∈ spec L_q(B), p + q = r. Coexact parts are peeled
/// off with coexact_from_full. Throws InconsistentSpectra.
KunnethSpectrum kunneth_spectrum(const std::vector<Eigen::VectorXd>& full_a, const std::vector<int>& betti_a,
                                 const std::vector<Eigen::VectorXd>& full_b, const std::vector<int>& betti_b, int r);

/// Number of leading entries of a sorted spectrum equal to the first one
/// within rel_tol (relative).
std::size_t leading_multiplicity(const Eigen::VectorXd& sorted, double rel_tol = 1e-9);

struct MultiplicityReport {
  int p = 0;
  int k = 0;
  double n1_mu0 = 0.0;  // first nonzero function eigenvalue of N1
  std::size_t n1_mu0_multiplicity = 0;
  double n1_mu1 = 0.0;  // first coexact 1-eigenvalue of N1 (inf if none)
  bool side_condition = false;
  int n2_betti = 0;
  double n2_floor = 0.0;  // lowest nonzero eigenvalue of N2 over all degrees
  bool gap_condition = false;
  double mu1 = 0.0;  // first coexact p-eigenvalue of the product (direct eigensolve)
  std::size_t multiplicity = 0;
  bool first_value_matches = false;  // mu1 == n1_mu0
  bool verified = false;
  std::string relaxation;
};

/// Checks a product N1 × N2 against the multiplicity mechanism by direct
/// eigensolve of the product Laplacians.
MultiplicityReport multiplicity_report(const ProductComplex& prod, const CochainComplex& n1, const WeightSystem& w1,
                                       const CochainComplex& n2, const WeightSystem& w2, int p, int k);

/// N1 = 2-skeleton of the k-simplex (function spectrum {0, k+1 (k times)}),
/// N2 = boundary of the (p+1)-simplex scaled so its spectrum sits above
/// 2(k+1). Returns the product and a verified report.
std::pair<ProductComplex, MultiplicityReport> high_multiplicity_example(int p, int k);

}  // namespace hodge

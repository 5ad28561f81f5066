#include "hodge/product.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hodge/error.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

namespace {

struct Built {
  std::pair<std::vector<std::size_t>, std::vector<Incidence>> parts;
  std::vector<std::vector<ProductComplex::Cell>> cells;
  std::vector<std::vector<std::size_t>> offsets;
  std::vector<std::size_t> dims_b;
  std::vector<Eigen::VectorXd> weights;
};

Built build(const CochainComplex& a, const WeightSystem& wa, const CochainComplex& b, const WeightSystem& wb) {
  const int ta = a.top_degree();
  const int tb = b.top_degree();
  const int top = ta + tb;
  Built out;
  for (int q = 0; q <= tb; ++q) out.dims_b.push_back(b.dim(q));
  out.cells.resize(static_cast<std::size_t>(top + 1));
  out.offsets.assign(static_cast<std::size_t>(top + 1), std::vector<std::size_t>(static_cast<std::size_t>(ta + 2), 0));
  std::vector<std::size_t> dims;
  for (int r = 0; r <= top; ++r) {
    std::size_t n = 0;
    for (int p = 0; p <= ta; ++p) {
      out.offsets[r][p] = n;
      const int q = r - p;
      if (q < 0 || q > tb) continue;
      for (std::size_t i = 0; i < a.dim(p); ++i) {
        for (std::size_t j = 0; j < b.dim(q); ++j) out.cells[r].push_back({p, i, j});
      }
      n += a.dim(p) * b.dim(q);
    }
    out.offsets[r][ta + 1] = n;
    dims.push_back(n);
    Eigen::VectorXd w(static_cast<Eigen::Index>(n));
    for (std::size_t c = 0; c < n; ++c) {
      const auto& cell = out.cells[r][c];
      w[static_cast<Eigen::Index>(c)] =
          wa[cell.p][static_cast<Eigen::Index>(cell.i)] * wb[r - cell.p][static_cast<Eigen::Index>(cell.j)];
    }
    out.weights.push_back(std::move(w));
  }
  auto idx = [&](int r, int p, std::size_t i, std::size_t j) {
    return out.offsets[r][p] + i * b.dim(r - p) + j;
  };
  std::vector<Incidence> d;
  for (int r = 0; r <= top; ++r) {
    std::vector<Eigen::Triplet<int>> t;
    if (r < top) {
      for (int p = 0; p <= ta; ++p) {
        const int q = r - p;
        if (q < 0 || q > tb) continue;
        // da ⊗ b
        if (p < ta) {
          const Incidence& da = a.coboundary(p);
          for (Eigen::Index c = 0; c < da.outerSize(); ++c) {
            for (Incidence::InnerIterator it(da, c); it; ++it) {
              for (std::size_t j = 0; j < b.dim(q); ++j) {
                t.emplace_back(static_cast<int>(idx(r + 1, p + 1, static_cast<std::size_t>(it.row()), j)),
                               static_cast<int>(idx(r, p, static_cast<std::size_t>(it.col()), j)), it.value());
              }
            }
          }
        }
        // (-1)^p a ⊗ db
        if (q < tb) {
          const int sign = p % 2 == 0 ? 1 : -1;
          const Incidence& db = b.coboundary(q);
          for (Eigen::Index c = 0; c < db.outerSize(); ++c) {
            for (Incidence::InnerIterator it(db, c); it; ++it) {
              for (std::size_t i = 0; i < a.dim(p); ++i) {
                t.emplace_back(static_cast<int>(idx(r + 1, p, i, static_cast<std::size_t>(it.row()))),
                               static_cast<int>(idx(r, p, i, static_cast<std::size_t>(it.col()))), sign * it.value());
              }
            }
          }
        }
      }
    }
    const auto rows = r < top ? static_cast<Eigen::Index>(dims[r + 1]) : 0;
    Incidence m(rows, static_cast<Eigen::Index>(dims[r]));
    m.setFromTriplets(t.begin(), t.end());
    d.push_back(std::move(m));
  }
  out.parts = {std::move(dims), std::move(d)};
  return out;
}

}  // namespace

ProductComplex::ProductComplex(std::pair<std::vector<std::size_t>, std::vector<Incidence>> parts,
                               std::vector<std::vector<Cell>> cells, std::vector<std::vector<std::size_t>> offsets,
                               std::vector<std::size_t> dims_b, std::vector<Eigen::VectorXd> weights)
    : CochainComplex(std::move(parts.first), std::move(parts.second)),
      cells_(std::move(cells)),
      offsets_(std::move(offsets)),
      dims_b_(std::move(dims_b)),
      w_(*this, std::move(weights)) {}

ProductComplex::ProductComplex(const CochainComplex& a, const WeightSystem& wa, const CochainComplex& b,
                               const WeightSystem& wb)
    : ProductComplex([&] {
        // validate factor weights before building
        (void)WeightSystem(a, wa.all());
        (void)WeightSystem(b, wb.all());
        Built x = build(a, wa, b, wb);
        return ProductComplex(std::move(x.parts), std::move(x.cells), std::move(x.offsets), std::move(x.dims_b),
                              std::move(x.weights));
      }()) {}

const std::vector<ProductComplex::Cell>& ProductComplex::cells(int r) const {
  if (r < 0 || r > top_degree()) throw Error(ErrorCode::DegreeOutOfRange, "no degree " + std::to_string(r));
  return cells_[static_cast<std::size_t>(r)];
}

std::size_t ProductComplex::index(int p, std::size_t i, int q, std::size_t j) const {
  const int r = p + q;
  if (r < 0 || r > top_degree() || p < 0 || q < 0 || static_cast<std::size_t>(q) >= dims_b_.size() ||
      static_cast<std::size_t>(p) + 1 >= offsets_[r].size()) {
    throw Error(ErrorCode::DegreeOutOfRange, "no block (" + std::to_string(p) + "," + std::to_string(q) + ")");
  }
  return offsets_[r][p] + i * dims_b_[q] + j;
}

Eigen::VectorXd ProductComplex::tensor(int p, const Eigen::VectorXd& u, int q, const Eigen::VectorXd& v) const {
  const int r = p + q;
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim(r)));
  if (static_cast<std::size_t>(v.size()) != dims_b_.at(q)) throw Error(ErrorCode::InvalidArgument, "size mismatch");
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    for (Eigen::Index j = 0; j < v.size(); ++j) {
      out[static_cast<Eigen::Index>(index(p, static_cast<std::size_t>(i), q, static_cast<std::size_t>(j)))] =
          u[i] * v[j];
    }
  }
  return out;
}

ProductComplex product_complex(const CochainComplex& a, const WeightSystem& wa, const CochainComplex& b,
                               const WeightSystem& wb) {
  return ProductComplex(a, wa, b, wb);
}

KunnethSpectrum kunneth_spectrum(const std::vector<Eigen::VectorXd>& full_a, const std::vector<int>& betti_a,
                                 const std::vector<Eigen::VectorXd>& full_b, const std::vector<int>& betti_b, int r) {
  if (full_a.size() != betti_a.size() || full_b.size() != betti_b.size()) {
    throw Error(ErrorCode::InconsistentSpectra, "one betti number per degree is required");
  }
  if (r < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  KunnethSpectrum out;
  out.degree = r;
  for (int s = 0; s <= r; ++s) {
    std::vector<double> vals;
    int betti = 0;
    for (int p = 0; p <= s; ++p) {
      const int q = s - p;
      if (p >= static_cast<int>(full_a.size()) || q >= static_cast<int>(full_b.size())) continue;
      for (Eigen::Index i = 0; i < full_a[p].size(); ++i) {
        for (Eigen::Index j = 0; j < full_b[q].size(); ++j) vals.push_back(full_a[p][i] + full_b[q][j]);
      }
      betti += betti_a[p] * betti_b[q];
    }
    std::sort(vals.begin(), vals.end());
    out.full.push_back(Eigen::Map<Eigen::VectorXd>(vals.data(), static_cast<Eigen::Index>(vals.size())));
    out.betti.push_back(betti);
  }
  out.coexact = coexact_from_full(out.full, out.betti);
  return out;
}

std::size_t leading_multiplicity(const Eigen::VectorXd& sorted, double rel_tol) {
  if (sorted.size() == 0) return 0;
  const double first = sorted[0];
  std::size_t m = 0;
  for (Eigen::Index i = 0; i < sorted.size(); ++i) {
    if (std::abs(sorted[i] - first) > rel_tol * std::max(1.0, std::abs(first))) break;
    ++m;
  }
  return m;
}

MultiplicityReport multiplicity_report(const ProductComplex& prod, const CochainComplex& n1, const WeightSystem& w1,
                                       const CochainComplex& n2, const WeightSystem& w2, int p, int k) {
  MultiplicityReport rep;
  rep.p = p;
  rep.k = k;
  const auto f1 = coexact_spectrum(n1, w1, 0, false);
  rep.n1_mu0 = f1.values.size() ? f1.values[0] : INFINITY;
  rep.n1_mu0_multiplicity = leading_multiplicity(f1.values);
  if (n1.top_degree() >= 1) {
    const auto c1 = coexact_spectrum(n1, w1, 1, false);
    rep.n1_mu1 = c1.values.size() ? c1.values[0] : INFINITY;
  } else {
    rep.n1_mu1 = INFINITY;
  }
  rep.side_condition = rep.n1_mu1 > rep.n1_mu0;
  rep.n2_betti = n2.betti(p);
  rep.n2_floor = INFINITY;
  for (int q = 0; q <= n2.top_degree(); ++q) {
    const auto s = coexact_spectrum(n2, w2, q, false);
    if (s.values.size()) rep.n2_floor = std::min(rep.n2_floor, s.values[0]);
  }
  rep.gap_condition = rep.n2_betti > 0 && rep.n2_floor > rep.n1_mu0;
  const auto s = coexact_spectrum(prod, prod.weights(), p, false);
  rep.mu1 = s.values.size() ? s.values[0] : INFINITY;
  rep.multiplicity = leading_multiplicity(s.values);
  rep.first_value_matches = std::abs(rep.mu1 - rep.n1_mu0) <= 1e-9 * std::max(1.0, rep.n1_mu0);
  rep.verified = rep.first_value_matches && rep.side_condition && rep.gap_condition &&
                 rep.multiplicity >= static_cast<std::size_t>(k);
  rep.relaxation = "N1 is a 2-dimensional simplicial complex with the required spectral features, not a 3-manifold";
  return rep;
}

std::pair<ProductComplex, MultiplicityReport> high_multiplicity_example(int p, int k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (p < 0) throw Error(ErrorCode::InvalidArgument, "p must be nonnegative");
  // N1: complete graph on k+1 vertices with all triangles. Triangle weight 4
  // keeps the coexact 1-spectrum at 4(k+1) > k+1.
  const SimplicialComplex n1 = fixtures::simplex_skeleton(k + 1, std::min(k, 2)).complex;
  std::vector<Eigen::VectorXd> w;
  for (int j = 0; j <= n1.top_dim(); ++j) {
    w.push_back(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n1.dim(j)), j == 2 ? 4.0 : 1.0));
  }
  const WeightSystem w1(n1, w);

  // N2: boundary of the (p+1)-simplex, b_p = 1 (b_0 = 2 for p = 0), nonzero
  // spectrum p+2 lifted above 2(k+1).
  const SimplicialComplex n2 = (p == 0 ? fixtures::simplex_skeleton(2, 0) : fixtures::sphere(p)).complex;
  const double floor2 = p == 0 ? INFINITY : static_cast<double>(p + 2);
  WeightSystem w2 = WeightSystem::unit(n2);
  if (std::isfinite(floor2)) {
    const double c = std::sqrt(floor2 / (2.0 * (k + 1)));
    w2 = homothety(w2, std::min(c, 1.0), std::max(p, 1));
  }
  ProductComplex prod(n1, w1, n2, w2);
  MultiplicityReport rep = multiplicity_report(prod, n1, w1, n2, w2, p, k);
  return {std::move(prod), std::move(rep)};
}

}  // namespace hodge

#include "hodge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodge/error.hpp"
#include "hodge/laplacian.hpp"

namespace hodge {

namespace {

void check_degree(const CochainComplex& k, int p) {
  if (p < 0 || p > k.top_degree()) throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(p));
}

double radius(const Eigen::VectorXd& v) { return v.size() ? std::max(1.0, v.cwiseAbs().maxCoeff()) : 1.0; }

}  // namespace

Eigenpairs full_eigenpairs(const CochainComplex& k, const WeightSystem& w, int p) {
  check_degree(k, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(k, w, p).matrix());
  return {es.eigenvalues(), es.eigenvectors()};
}

Eigen::VectorXd full_spectrum(const CochainComplex& k, const WeightSystem& w, int p) {
  check_degree(k, p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(laplacian(k, w, p).matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

CoexactSpectrum coexact_spectrum(const CochainComplex& k, const WeightSystem& w, int p, bool with_vectors) {
  check_degree(k, p);
  CoexactSpectrum out;
  out.degree = p;
  const auto r = static_cast<Eigen::Index>(k.rank(p));
  const auto n = static_cast<Eigen::Index>(k.dim(p));
  if (r == 0) {
    out.values.resize(0);
    out.vectors.resize(n, 0);
    out.cochains.resize(n, 0);
    return out;
  }
  const Eigen::MatrixXd b = weighted_coboundary(k, w, p);
  const auto opt = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  // Work with the smaller Gram matrix; both share the nonzero spectrum.
  const bool row_side = b.rows() < b.cols();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  if (row_side) {
    es.compute(b * b.transpose(), opt);
  } else {
    es.compute(b.transpose() * b, opt);
  }
  out.values = es.eigenvalues().tail(r);
  if (with_vectors) {
    if (row_side) {
      out.vectors = b.transpose() * es.eigenvectors().rightCols(r);
      for (Eigen::Index i = 0; i < r; ++i) out.vectors.col(i) /= out.vectors.col(i).norm();
    } else {
      out.vectors = es.eigenvectors().rightCols(r);
    }
    out.cochains = w[p].cwiseSqrt().cwiseInverse().asDiagonal() * out.vectors;
  }
  return out;
}

ConsistencyReport consistency_report(const CochainComplex& k, const WeightSystem& w, int p) {
  check_degree(k, p);
  ConsistencyReport rep;
  rep.degree = p;
  rep.betti = k.betti(p);
  const Eigen::VectorXd full = full_spectrum(k, w, p);
  rep.tolerance = kSpectrumTol * radius(full);
  for (Eigen::Index i = 0; i < full.size(); ++i) {
    if (std::abs(full[i]) <= rep.tolerance) ++rep.kernel_dim;
  }
  Eigen::VectorXd expect = Eigen::VectorXd::Zero(std::max(0, rep.betti));
  if (p > 0) expect = merge_sorted(expect, coexact_spectrum(k, w, p - 1, false).values);
  expect = merge_sorted(expect, coexact_spectrum(k, w, p, false).values);
  if (expect.size() != full.size()) {
    rep.max_deviation = INFINITY;
    rep.passed = false;
    return rep;
  }
  for (Eigen::Index i = 0; i < full.size(); ++i) {
    const double dev = std::abs(full[i] - expect[i]);
    if (dev > rep.max_deviation) {
      rep.max_deviation = dev;
      rep.offending = full[i];
    }
  }
  rep.passed = rep.max_deviation <= rep.tolerance && rep.kernel_dim == static_cast<std::size_t>(rep.betti);
  return rep;
}

ConsistencyReport hodge_consistency(const CochainComplex& k, const WeightSystem& w, int p) {
  ConsistencyReport rep = consistency_report(k, w, p);
  if (!rep.passed) {
    throw Error(ErrorCode::ConsistencyViolation,
                "degree " + std::to_string(p) + ": eigenvalue " + std::to_string(rep.offending) + " deviates by " +
                    std::to_string(rep.max_deviation) + "; kernel " + std::to_string(rep.kernel_dim) + " vs b_p " +
                    std::to_string(rep.betti));
  }
  return rep;
}

std::vector<Eigen::VectorXd> coexact_from_full(const std::vector<Eigen::VectorXd>& full, const std::vector<int>& betti,
                                               double tol) {
  if (full.size() != betti.size()) throw Error(ErrorCode::InconsistentSpectra, "one Betti number per degree is required");
  std::vector<Eigen::VectorXd> out;
  Eigen::VectorXd prev(0);
  for (std::size_t p = 0; p < full.size(); ++p) {
    std::vector<double> rest(full[p].data(), full[p].data() + full[p].size());
    std::sort(rest.begin(), rest.end());
    const double eps = tol * radius(full[p]);
    const auto b = static_cast<std::size_t>(std::max(0, betti[p]));
    if (rest.size() < b) throw Error(ErrorCode::InconsistentSpectra, "fewer eigenvalues than b_" + std::to_string(p));
    for (std::size_t i = 0; i < b; ++i) {
      if (std::abs(rest[i]) > eps) {
        throw Error(ErrorCode::InconsistentSpectra,
                    "degree " + std::to_string(p) + " has only " + std::to_string(i) + " zero eigenvalues");
      }
    }
    rest.erase(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(b));
    std::vector<bool> used(rest.size(), false);
    std::size_t j = 0;
    for (Eigen::Index i = 0; i < prev.size(); ++i) {
      while (j < rest.size() && (used[j] || rest[j] < prev[i] - eps)) ++j;
      if (j == rest.size() || std::abs(rest[j] - prev[i]) > eps) {
        throw Error(ErrorCode::InconsistentSpectra,
                    std::to_string(prev[i]) + " from degree " + std::to_string(p - 1) + " missing in degree " +
                        std::to_string(p));
      }
      used[j++] = true;
    }
    std::vector<double> coex;
    for (std::size_t i = 0; i < rest.size(); ++i) {
      if (!used[i]) coex.push_back(rest[i]);
    }
    for (double v : coex) {
      if (v <= eps) throw Error(ErrorCode::InconsistentSpectra, "surplus zero eigenvalue in degree " + std::to_string(p));
    }
    prev = Eigen::Map<Eigen::VectorXd>(coex.data(), static_cast<Eigen::Index>(coex.size()));
    out.push_back(prev);
  }
  return out;
}

SpectralWindow window_of(const CoexactSpectrum& s, double lo, double hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "window needs lo < hi");
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (std::abs(s.values[i] - lo) < kWindowMargin || std::abs(s.values[i] - hi) < kWindowMargin) {
      throw Error(ErrorCode::EndpointTooCloseToSpectrum,
                  "eigenvalue " + std::to_string(s.values[i]) + " at a window endpoint");
    }
  }
  SpectralWindow out;
  out.degree = s.degree;
  out.lo = lo;
  out.hi = hi;
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < s.values.size(); ++i) {
    if (s.values[i] > lo && s.values[i] < hi) idx.push_back(i);
  }
  const auto m = static_cast<Eigen::Index>(idx.size());
  out.values.resize(m);
  const bool vecs = s.vectors.cols() == s.values.size();
  out.vectors.resize(s.vectors.rows(), vecs ? m : 0);
  out.cochains.resize(s.cochains.rows(), vecs ? m : 0);
  for (Eigen::Index j = 0; j < m; ++j) {
    out.values[j] = s.values[idx[static_cast<std::size_t>(j)]];
    if (vecs) {
      out.vectors.col(j) = s.vectors.col(idx[static_cast<std::size_t>(j)]);
      out.cochains.col(j) = s.cochains.col(idx[static_cast<std::size_t>(j)]);
    }
  }
  return out;
}

SpectralWindow spectral_window(const CochainComplex& k, const WeightSystem& w, int p, double lo, double hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "window needs lo < hi");
  return window_of(coexact_spectrum(k, w, p, true), lo, hi);
}

std::vector<std::pair<std::size_t, std::size_t>> clusters(const Eigen::VectorXd& sorted, double tol) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (Eigen::Index i = 0; i < sorted.size(); ++i) {
    if (!out.empty()) {
      const double prev = sorted[i - 1];
      if (std::abs(sorted[i] - prev) <= tol * std::max(1.0, std::abs(prev))) {
        ++out.back().second;
        continue;
      }
    }
    out.emplace_back(static_cast<std::size_t>(i), 1);
  }
  return out;
}

Eigen::VectorXd merge_sorted(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() + b.size());
  out << a, b;
  std::sort(out.data(), out.data() + out.size());
  return out;
}

}  // namespace hodge

#include <doctest.h>

#include <cmath>
#include <random>

#include "hodge/error.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/laplacian.hpp"
#include "hodge/spectral.hpp"
#include "hodge/subspace.hpp"
#include "support.hpp"

using namespace hodge;
using hodge::testing::same_multiset;
using hodge::testing::vec;

TEST_SUITE("spectral") {
  TEST_CASE("full spectra of small fixtures") {
    const auto t = fixtures::triangle_boundary();
    const auto tet = fixtures::tetrahedron_boundary();
    CHECK(same_multiset(full_spectrum(t.complex, t.weights, 0), vec({0, 3, 3}), 1e-12));
    CHECK(same_multiset(full_spectrum(tet.complex, tet.weights, 0), vec({0, 4, 4, 4}), 1e-12));
    CHECK(same_multiset(full_spectrum(t.complex, t.weights, 1), vec({0, 3, 3}), 1e-12));
    CHECK(consistency_report(t.complex, t.weights, 1).kernel_dim == 1);
  }

  TEST_CASE("coexact spectra") {
    const auto t = fixtures::triangle_boundary();
    const auto tet = fixtures::tetrahedron_boundary();
    CHECK(same_multiset(coexact_spectrum(t.complex, t.weights, 0).values, vec({3, 3}), 1e-12));
    CHECK(coexact_spectrum(t.complex, t.weights, 1).size() == 0);
    CHECK(same_multiset(coexact_spectrum(tet.complex, tet.weights, 0).values, vec({4, 4, 4}), 1e-12));
    CHECK_THROWS_AS(coexact_spectrum(t.complex, t.weights, 2), Error);
  }

  TEST_CASE("hodge consistency") {
    const auto t = fixtures::triangle_boundary();
    const auto tet = fixtures::tetrahedron_boundary();
    CHECK(hodge_consistency(t.complex, t.weights, 1).passed);
    const auto r = hodge_consistency(tet.complex, tet.weights, 1);
    CHECK(r.passed);
    CHECK(r.betti == 0);
  }

  TEST_CASE("coexact_from_full") {
    const auto c = coexact_from_full({vec({0, 3, 3}), vec({0, 3, 3})}, {1, 1});
    CHECK(same_multiset(c[0], vec({3, 3}), 1e-12));
    CHECK(c[1].size() == 0);
    try {
      coexact_from_full({vec({0, 3}), vec({0, 5})}, {1, 1});
      FAIL("expected InconsistentSpectra");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InconsistentSpectra);
    }
  }

  TEST_CASE("coexact_from_full agrees with coexact_spectrum") {
    for (const auto& f : testing::consistency_fixtures()) {
      const auto& k = f.complex.complex;
      std::vector<Eigen::VectorXd> full;
      for (int p = 0; p <= k.top_dim(); ++p) full.push_back(full_spectrum(k, f.complex.weights, p));
      const auto c = coexact_from_full(full, k.betti_numbers());
      for (int p = 0; p <= k.top_dim(); ++p) {
        const Eigen::VectorXd direct = coexact_spectrum(k, f.complex.weights, p, false).values;
        const double scale = std::max(1.0, full[static_cast<std::size_t>(p)].maxCoeff());
        CHECK_MESSAGE(same_multiset(c[static_cast<std::size_t>(p)], direct, 1e-9 * scale), f.name << " p=" << p);
      }
    }
  }

  TEST_CASE("coexact eigencochains") {
    for (const auto& f : testing::consistency_fixtures()) {
      const auto& k = f.complex.complex;
      const auto& w = f.complex.weights;
      for (int p = 0; p < k.top_dim(); ++p) {
        const CoexactSpectrum s = coexact_spectrum(k, w, p);
        const Eigen::MatrixXd bdown = weighted_coboundary(k, w, p - 1);
        for (Eigen::Index i = 0; i < s.vectors.cols(); ++i) {
          const Eigen::VectorXd phi = s.cochains.col(i);
          const Eigen::VectorXd lphi = apply_laplacian(k, w, p, phi);
          // residual in the W norm
          const Eigen::VectorXd sw = w[p].cwiseSqrt();
          const double res = (sw.asDiagonal() * (lphi - s.values[i] * phi)).norm();
          CHECK_MESSAGE(res <= 1e-9 * std::max(1.0, s.values[i]) * (sw.asDiagonal() * phi).norm(), f.name);
          if (bdown.cols() > 0) CHECK((bdown.transpose() * s.vectors.col(i)).norm() <= 1e-9);
        }
        const Eigen::VectorXd ww = w[p];
        const Eigen::MatrixXd gram = s.cochains.transpose() * ww.asDiagonal() * s.cochains;
        CHECK((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff() <= 1e-9);
      }
    }
  }

  TEST_CASE("spectral windows") {
    const auto t = fixtures::triangle_boundary();
    const auto w = spectral_window(t.complex, t.weights, 0, 1, 5);
    CHECK(w.values.size() == 2);
    CHECK(w.values[0] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(spectral_window(t.complex, t.weights, 0, 4, 9).values.size() == 0);
    try {
      spectral_window(t.complex, t.weights, 0, 3 - 1e-12, 4);
      FAIL("expected EndpointTooCloseToSpectrum");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EndpointTooCloseToSpectrum);
    }
  }

  TEST_CASE("subspace distance") {
    const Eigen::MatrixXd e = vec({1, 0});
    const Eigen::MatrixXd f = vec({0, 1});
    const Eigen::MatrixXd g = vec({std::cos(M_PI / 6), std::sin(M_PI / 6)});
    CHECK(subspace_distance(e, e).distance == doctest::Approx(0.0));
    CHECK(subspace_distance(e, f).distance == doctest::Approx(1.0));
    CHECK(subspace_distance(e, g).distance == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("subspace distance triangle inequality") {
    std::mt19937 rng(20261019);
    std::uniform_int_distribution<int> dim(1, 4), amb(4, 20);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = amb(rng);
      const int d = dim(rng);
      auto random_space = [&] {
        Eigen::MatrixXd m(n, d);
        for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = gauss(rng);
        return orthonormalize(m);
      };
      const auto a = random_space(), b = random_space(), c = random_space();
      const double ab = subspace_distance(a, b).distance;
      const double bc = subspace_distance(b, c).distance;
      const double ac = subspace_distance(a, c).distance;
      CHECK(ac <= ab + bc + 1e-10);
    }
  }
}

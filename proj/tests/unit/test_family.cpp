#include <doctest.h>

#include <cmath>

#include "hodge/double_eigenvalue.hpp"
#include "hodge/error.hpp"
#include "hodge/family.hpp"
#include "hodge/spectral.hpp"

using namespace hodge;

namespace {

FamilyConfig config(double eps) {
  FamilyConfig cfg;
  cfg.system = {3, 1, 1e-3, eps, 0.9};
  return cfg;
}

WeightedComplex base() { return scaled_octahedron(3, 1, 40.0); }

}  // namespace

TEST_SUITE("family") {
  TEST_CASE("window eigenvalues sit near the tunings") {
    const GluedFamily fam(base(), config(0.2));
    const WindowEigen w = fam.window({fam.lambda1() + fam.eta(), 0.0});
    REQUIRE(w.values.size() == 2);
    CHECK(std::abs(w.values[0] - fam.lambda1()) < 0.1 * fam.eta());
  }

  TEST_CASE("theta and theta + pi give conjugate operators") {
    const GluedFamily fam(base(), config(0.2));
    for (double th : {0.0, 0.7, 2.1}) {
      const auto a = fam.complex_at({1.05, th});
      const auto b = fam.complex_at({1.05, th + M_PI});
      for (int p = 0; p <= 1; ++p) {
        const Eigen::VectorXd sa = full_spectrum(a.complex, a.weights, p);
        const Eigen::VectorXd sb = full_spectrum(b.complex, b.weights, p);
        CHECK((sa - sb).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, sa.maxCoeff()));
      }
      // the half turn carries the weights at theta onto those at theta + pi
      for (int p = 0; p <= a.complex.top_dim(); ++p) {
        const SignedPermutation f = induced_permutation(a.complex, fam.conjugacy(), p);
        double worst = 0.0;
        for (std::size_t i = 0; i < f.target.size(); ++i) {
          worst = std::max(worst, std::abs(b.weights[p][static_cast<Eigen::Index>(f.target[i])] -
                                           a.weights[p][static_cast<Eigen::Index>(i)]));
        }
        CHECK(worst <= 1e-12 * a.weights[p].maxCoeff());
      }
    }
    // y is odd under the half turn
    const double y0 = fam.evaluate({1.0, 0.0}).form.y();
    const double y1 = fam.evaluate({1.0, M_PI}).form.y();
    CHECK(std::abs(y0) > 1e-7);
    CHECK(std::abs(y0 + y1) <= 1e-8 * fam.lambda1());
  }

  TEST_CASE("strong coupling pollutes the window") {
    // strong coupling drags the pair out of a narrow window
    FamilyConfig cfg = config(20.0);
    cfg.window_lo = 0.9;
    cfg.window_hi = 1.1;
    cfg.eta = 0.05;
    GluedFamily fam(base(), cfg);
    try {
      fam.evaluate({1.0, 0.0});
      FAIL("expected WindowPollution");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::WindowPollution);
    }
  }

  TEST_CASE("weak coupling decouples the effective form") {
    const GluedFamily fam(base(), config(1e-4));
    const FamilySample s = fam.evaluate({1.1, 0.0});
    CHECK(s.form.x() == doctest::Approx(-0.05).epsilon(1e-3));
    CHECK(std::abs(s.form.y()) < 1e-6);
  }

  TEST_CASE("effective form and reference frames") {
    Eigen::MatrixXd phi = Eigen::MatrixXd::Zero(4, 2);
    phi(0, 0) = std::cos(0.3);
    phi(1, 0) = std::sin(0.3);
    phi(0, 1) = -std::sin(0.3);
    phi(1, 1) = std::cos(0.3);
    const Eigen::MatrixXd ref = Eigen::MatrixXd::Identity(4, 2);
    const QuadraticForm2 equal = effective_form(phi, {2.0, 2.0}, ref);
    CHECK(std::abs(equal.x()) < 1e-14);
    CHECK(std::abs(equal.y()) < 1e-14);
    CHECK(equal.trace() == doctest::Approx(4.0));

    const QuadraticForm2 q = effective_form(phi, {1.0, 2.0}, ref);
    Eigen::MatrixXd rotated(4, 2);
    rotated.col(0) = ref.col(1);
    rotated.col(1) = -ref.col(0);
    const QuadraticForm2 r = effective_form(phi, {1.0, 2.0}, rotated);
    CHECK(r.x() == doctest::Approx(-q.x()).epsilon(1e-12));
    CHECK(r.y() == doctest::Approx(-q.y()).epsilon(1e-12));
  }

  TEST_CASE("double eigenvalue preconditions") {
    try {
      double_eigenvalue_metric(base(), 1, 1.0, 0.5, 100.0);
      FAIL("expected InvalidArgument");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidArgument);
    }
  }

  TEST_CASE("crossing on the theta axis is moved off the boundary") {
    DoubleEigenvalueOptions opt;
    opt.theta_offset = M_PI / 2;
    const auto r = double_eigenvalue_metric(base(), 1, 1.0, 10.0, 100.0, opt);
    CHECK(r.origin_shifts >= 1);
    CHECK(r.checks.passed());
    CHECK(r.degeneracy.point.theta > 0.0);
    CHECK(r.degeneracy.point.theta < M_PI);
  }
}

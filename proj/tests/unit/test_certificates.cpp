#include <doctest.h>

#include <cmath>
#include <random>

#include "hodge/certificates.hpp"
#include "hodge/error.hpp"
#include "support.hpp"

using namespace hodge;

namespace {

std::vector<ParamPoint> circle(double cx, double cy, double r, int n = 64) {
  std::vector<ParamPoint> loop;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * M_PI * i / n;
    loop.push_back({cx + r * std::cos(t), cy + r * std::sin(t)});
  }
  return loop;
}

FamilyEvaluator planar(std::function<Eigen::Vector2d(double, double)> f) {
  return [f](const ParamPoint& a) {
    const Eigen::Vector2d xy = f(a.lambda2, a.theta);
    return FamilySample{QuadraticForm2::from_coordinates(xy[0], xy[1], 3.0), Eigen::VectorXd()};
  };
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("certificates") {
  TEST_CASE("quadratic form eigenvalues") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 100; ++i) {
      Eigen::Matrix2d m;
      m << u(rng), u(rng), 0, u(rng);
      m(1, 0) = m(0, 1);
      const QuadraticForm2 q(m);
      const Eigen::Vector2d direct = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(m).eigenvalues();
      const double r = std::hypot(q.x(), q.y());
      CHECK(std::abs(q.trace() / 2 - r - direct[0]) <= 1e-14 * 8);
      CHECK(std::abs(q.trace() / 2 + r - direct[1]) <= 1e-14 * 8);
      CHECK((q.eigenvalues() - direct).cwiseAbs().maxCoeff() <= 1e-14 * 8);
    }
    const QuadraticForm2 d(2.5 * Eigen::Matrix2d::Identity());
    CHECK(d.x() == 0.0);
    CHECK(d.y() == 0.0);
    CHECK(d.trace() == 5.0);
  }

  TEST_CASE("loop winding on synthetic maps") {
    const auto loop = circle(0, 0, 1);
    CHECK(loop_winding(planar([](double s, double t) { return Eigen::Vector2d(s, t); }), loop) == 1);
    CHECK(loop_winding(planar([](double, double) { return Eigen::Vector2d(1, 0.2); }), loop) == 0);
    CHECK(loop_winding(planar([](double s, double t) { return Eigen::Vector2d(s * s - t * t, 2 * s * t); }), loop) ==
          2);
    CHECK(code_of([&] { loop_winding(planar([](double, double) { return Eigen::Vector2d(0, 0); }), loop); }) ==
          ErrorCode::GuardViolated);
  }

  TEST_CASE("eigenline holonomy") {
    // q(t) = R(t/2) diag(2,1) R(t/2)^T in the (x, y) coordinates
    const auto f = planar([](double s, double t) {
      const double a = std::atan2(t, s);
      return Eigen::Vector2d(0.5 * std::cos(a), 0.5 * std::sin(a));
    });
    CHECK(eigenline_holonomy(f, circle(0, 0, 1)) == -1);
    CHECK(eigenline_holonomy(planar([](double, double) { return Eigen::Vector2d(0.5, 0); }), circle(0, 0, 1)) == 1);
    const auto lin = planar([](double s, double t) { return Eigen::Vector2d(s, t); });
    CHECK(eigenline_holonomy(lin, circle(1, 0, 0.2)) == 1);
    CHECK(eigenline_holonomy(lin, circle(0, 0, 0.2)) == -1);
  }

  TEST_CASE("find_degeneracy on a synthetic cone") {
    testing::SyntheticCone c;
    c.center = {0.3, 1.1};
    c.a << 1.0, 0.3, -0.2, 0.8;
    c.curvature = 0.5;
    const DomainRect d{0.0, 1.0, 0.5, 2.0};
    DegeneracyOptions opt;
    opt.tol = 1e-4;
    const Degeneracy r = find_degeneracy(c.evaluator(), d, opt);
    CHECK(std::abs(r.point.lambda2 - 0.3) <= 1e-4);
    CHECK(std::abs(r.point.theta - 1.1) <= 1e-4);
    CHECK(r.gap < 1e-8);
    CHECK(std::abs(r.winding) == 1);
    CHECK(r.double_value == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(!r.steps.empty());
    for (const auto& s : r.steps) {
      CHECK(s.children[0] + s.children[1] + s.children[2] + s.children[3] == s.parent);
      CHECK(s.children[static_cast<std::size_t>(s.chosen)] != 0);
    }
  }

  TEST_CASE("no certificate without winding") {
    testing::SyntheticCone c;
    c.center = {0.3, 1.1};
    const DomainRect d{0.5, 1.0, 0.5, 2.0};
    CHECK(code_of([&] { find_degeneracy(c.evaluator(), d); }) == ErrorCode::NoCertificate);
  }

  TEST_CASE("degeneracy on the boundary") {
    testing::SyntheticCone c;
    c.center = {0.5, 1.0};
    const DomainRect d{0.0, 0.5, 0.5, 2.0};
    CHECK(code_of([&] { find_degeneracy(c.evaluator(), d); }) == ErrorCode::BoundaryDegeneracy);
  }

  TEST_CASE("transversality") {
    testing::SyntheticCone c;
    c.center = {0.3, 1.1};
    const DomainRect d{0.0, 1.0, 0.5, 2.0};
    const auto strong = transversality_report(c.evaluator(), d, c.center);
    CHECK(strong.weak);
    CHECK(strong.strong);

    const auto cubic = planar([](double s, double t) {
      return Eigen::Vector2d(std::pow(s - 0.3, 3), std::pow(t - 1.1, 3));
    });
    const auto weak = transversality_report(cubic, d, {0.3, 1.1});
    CHECK(weak.weak);
    CHECK(std::abs(weak.winding) == 1);
    CHECK_FALSE(weak.strong);

    const DomainRect off{0.5, 1.0, 0.5, 2.0};
    CHECK_FALSE(transversality_report(c.evaluator(), off, off.center()).weak);
  }

  TEST_CASE("domain corners") {
    const DomainRect d = DomainRect::around(1.0, 0.2);
    CHECK(d.corner(0).lambda2 == doctest::Approx(1.2));
    CHECK(d.corner(0).theta == 0.0);
    CHECK(d.corner(1).lambda2 == doctest::Approx(0.8));
    CHECK(d.corner(2).theta == doctest::Approx(M_PI));
    CHECK(d.corner(3).lambda2 == doctest::Approx(1.2));
  }
}

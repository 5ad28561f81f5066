#include <doctest.h>

#include <cmath>

#include "hodge/dumbbell.hpp"
#include "hodge/error.hpp"
#include "hodge/spectral.hpp"

using namespace hodge;

TEST_SUITE("dumbbell") {
  TEST_CASE("function dumbbell, small mode decays with the neck") {
    const auto a = dumbbell(2, 0, 1e-2);
    const auto b = dumbbell(2, 0, 1e-3);
    const double ma = coexact_spectrum(a.body.complex, a.body.weights, 0, false).values[0];
    const double mb = coexact_spectrum(b.body.complex, b.body.weights, 0, false).values[0];
    CHECK(mb / ma < 0.2);
  }

  TEST_CASE("one-form dumbbell") {
    const auto a = dumbbell(3, 1, 1e-2);
    const auto b = dumbbell(3, 1, 1e-3);
    const auto sa = coexact_spectrum(a.body.complex, a.body.weights, 1, false).values;
    const auto sb = coexact_spectrum(b.body.complex, b.body.weights, 1, false).values;
    CHECK(sb[0] / sa[0] < 0.3);
    CHECK(sb[1] / sa[1] < 2.0);
    CHECK(sa[1] / sb[1] < 2.0);
    CHECK(a.body.complex.betti_numbers() == std::vector<int>{1, 0, 1});
  }

  TEST_CASE("small mode is odd") {
    for (int p : {0, 1}) {
      const auto g = dumbbell(3, p, 1e-2);
      const auto s = coexact_spectrum(g.body.complex, g.body.weights, p);
      const Cochain phi{p, s.cochains.col(0)};
      CHECK(symmetry_ratio(g.body.complex, g.body.weights, g.involution, phi) == doctest::Approx(-1.0).epsilon(1e-8));
      CHECK(check_odd_symmetry(g, s, 0) == -1);
    }
  }

  TEST_CASE("constant function is even") {
    const auto g = dumbbell(3, 0, 1e-2);
    const Cochain one{0, Eigen::VectorXd::Ones(static_cast<Eigen::Index>(g.body.complex.dim(0)))};
    CHECK(odd_symmetry_sign(g.body.complex, g.body.weights, g.involution, one) == 1);
  }

  TEST_CASE("non-simple eigenvalue is rejected") {
    const auto g = dumbbell(3, 1, 1e-1);
    const auto s = coexact_spectrum(g.body.complex, g.body.weights, 1);
    std::size_t i = 0;
    while (i + 1 < s.size() && std::abs(s.values[static_cast<Eigen::Index>(i + 1)] - s.values[static_cast<Eigen::Index>(i)]) > 1e-8) ++i;
    REQUIRE(i + 1 < s.size());
    try {
      check_odd_symmetry(g, s, i);
      FAIL("expected EigenvalueNotSimple");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EigenvalueNotSimple);
    }
  }

  TEST_CASE("support table") {
    CHECK_THROWS_AS(dumbbell(3, 2, 1e-2), Error);
    CHECK_THROWS_AS(dumbbell(7, 1, 1e-2), Error);
    CHECK_THROWS_AS(dumbbell(3, 1, 0.5), Error);
    try {
      dumbbell(3, 2, 1e-2);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedDegree);
    }
  }

  TEST_CASE("involution preserves weights and fixes the attach vertex") {
    for (int p : {0, 1}) {
      const auto g = dumbbell(3, p, 1e-2);
      CHECK(preserves_weights(g.body.complex, g.body.weights, g.involution, 1e-14));
      const auto it = g.involution.find(g.attach_vertex);
      CHECK((it == g.involution.end() || it->second == g.attach_vertex));
      CHECK(g.ring.size() % 2 == 0);
    }
  }
}

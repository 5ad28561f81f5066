#include <doctest.h>

#include <cmath>

#include "hodge/cochain.hpp"
#include "hodge/error.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/spectral.hpp"
#include "support.hpp"

using namespace hodge;
using hodge::testing::vec;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("triangle boundary has a signed 3x3 coboundary") {
    const auto t = fixtures::triangle_boundary();
    const Eigen::MatrixXi d0 = Eigen::MatrixXi(t.complex.coboundary(0));
    CHECK(d0.rows() == 3);
    CHECK(d0.cols() == 3);
    for (int r = 0; r < 3; ++r) {
      CHECK(d0.row(r).sum() == 0);
      CHECK(d0.row(r).cwiseAbs().sum() == 2);
    }
  }

  TEST_CASE("tetrahedron boundary is a valid 2-complex") {
    const auto t = fixtures::tetrahedron_boundary();
    CHECK(t.complex.dim(0) == 4);
    CHECK(t.complex.dim(1) == 6);
    CHECK(t.complex.dim(2) == 4);
    const Incidence dd = t.complex.coboundary(1) * t.complex.coboundary(0);
    CHECK(Eigen::MatrixXi(dd).cwiseAbs().sum() == 0);
  }

  TEST_CASE("validation errors") {
    CHECK(throws_code(ErrorCode::MissingFace, [] { SimplicialComplex::build({{{1}}, {{1, 2}}}); }));
    CHECK(throws_code(ErrorCode::DuplicateSimplex, [] { SimplicialComplex::build({{{0}, {0}}}); }));
    CHECK(throws_code(ErrorCode::OrientationError, [] { SimplicialComplex::build({{{0}, {1}}, {{1, 0}}}); }));
    // d1 d0 != 0
    Incidence d0(1, 2), d1(1, 1), d2(0, 1);
    d0.insert(0, 0) = 1;
    d1.insert(0, 0) = 1;
    CHECK(throws_code(ErrorCode::OrientationError, [&] { CochainComplex({2, 1, 1}, {d0, d1, d2}); }));
  }

  TEST_CASE("d d = 0 on every fixture") {
    for (const auto& f : testing::consistency_fixtures()) {
      for (int p = 0; p + 1 < f.complex.complex.top_dim(); ++p) {
        const Incidence dd = f.complex.complex.coboundary(p + 1) * f.complex.complex.coboundary(p);
        CHECK_MESSAGE(Eigen::MatrixXi(dd).cwiseAbs().sum() == 0, f.name);
      }
    }
  }

  TEST_CASE("betti numbers") {
    CHECK(fixtures::triangle_boundary().complex.betti_numbers() == std::vector<int>{1, 1});
    CHECK(fixtures::tetrahedron_boundary().complex.betti_numbers() == std::vector<int>{1, 0, 1});
    CHECK(fixtures::two_triangles().complex.betti_numbers() == std::vector<int>{2, 2});
    CHECK(fixtures::sphere(3).complex.betti_numbers() == std::vector<int>{1, 0, 0, 1});
  }

  TEST_CASE("volume") {
    const auto tet = fixtures::tetrahedron_boundary();
    CHECK(tet.weights.volume() == 4.0);
    const auto t = fixtures::triangle_boundary();
    const WeightSystem w(t.complex, {vec({0.5, 0.5, 1.0}), vec({1, 1, 1})});
    CHECK(w.volume() == 2.0);
    CHECK(homothety(tet.weights, 2.0, 3).volume() == 32.0);
  }

  TEST_CASE("weight validation") {
    const auto t = fixtures::triangle_boundary();
    CHECK(throws_code(ErrorCode::InvalidWeights, [&] { WeightSystem(t.complex, {vec({1, -1, 1}), vec({1, 1, 1})}); }));
    CHECK(throws_code(ErrorCode::InvalidWeights, [&] { WeightSystem(t.complex, {vec({1, 1})}); }));
    CHECK(throws_code(ErrorCode::NonpositiveScale, [&] { homothety(t.weights, 0.0, 2); }));
  }

  TEST_CASE("homothety") {
    const auto t = fixtures::triangle_boundary();
    const WeightSystem same = homothety(t.weights, 1.0, 2);
    for (int p = 0; p <= 1; ++p) CHECK(same[p] == t.weights[p]);
    const Eigen::VectorXd s = full_spectrum(t.complex, homothety(t.weights, 2.0, 2), 0);
    CHECK(testing::same_multiset(s, vec({0, 0.75, 0.75}), 1e-12));

    const auto o = fixtures::octahedron_boundary();
    const WeightSystem twice = homothety(homothety(o.weights, std::sqrt(2.0), 3), std::sqrt(2.0), 3);
    const WeightSystem once = homothety(o.weights, 2.0, 3);
    for (int p = 0; p <= 2; ++p) CHECK((twice[p] - once[p]).cwiseAbs().maxCoeff() <= 1e-14 * once[p].maxCoeff());
  }

  TEST_CASE("pullback") {
    const auto t = fixtures::triangle_boundary();
    const Cochain phi{1, vec({1.0, 2.0, 3.0})};
    CHECK(pullback(t.complex, {}, phi).values == phi.values);
    // swapping 0 and 1 reverses the edge [0,1]
    const Cochain swapped = pullback(t.complex, {{0, 1}, {1, 0}}, phi);
    const std::size_t e01 = t.complex.index({0, 1});
    CHECK(swapped.values[static_cast<Eigen::Index>(e01)] == -phi.values[static_cast<Eigen::Index>(e01)]);
  }

  TEST_CASE("octahedron antipode is a weight-preserving involution") {
    const auto o = fixtures::octahedron_boundary();
    const VertexMap a = fixtures::octahedron_antipode();
    CHECK(preserves_weights(o.complex, o.weights, a));
    for (int p = 0; p <= 2; ++p) {
      Eigen::VectorXd v(static_cast<Eigen::Index>(o.complex.dim(p)));
      for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = std::sin(1.3 * i + p);
      const Cochain phi{p, v};
      CHECK(pullback(o.complex, a, pullback(o.complex, a, phi)).values.isApprox(v, 1e-15));
    }
    VertexMap identity;
    for (const auto& [from, to] : compose(a, a)) CHECK(from == to);
    CHECK(throws_code(ErrorCode::NotSimplicialMap, [&] { induced_permutation(o.complex, {{0, 2}}, 1); }));
  }

  TEST_CASE("integer rank") {
    const auto s = fixtures::simplex_skeleton(7, 3);
    CHECK(s.complex.rank(0) == 6);
    CHECK(s.complex.betti(1) == 0);
    CHECK(s.complex.betti(2) == 0);
  }
}

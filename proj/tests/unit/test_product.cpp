#include <doctest.h>

#include <cmath>

#include "hodge/dumbbell.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/laplacian.hpp"
#include "hodge/product.hpp"
#include "hodge/spectral.hpp"
#include "support.hpp"

using namespace hodge;
using hodge::testing::same_multiset;
using hodge::testing::vec;

namespace {

std::vector<Eigen::VectorXd> spectra(const WeightedComplex& c) {
  std::vector<Eigen::VectorXd> out;
  for (int p = 0; p <= c.complex.top_dim(); ++p) out.push_back(full_spectrum(c.complex, c.weights, p));
  return out;
}

WeightedComplex reweighted_triangle() {
  const auto t = fixtures::triangle_boundary();
  return {t.complex, WeightSystem(t.complex, {vec({1.0, 2.0, 0.5}), vec({1.5, 0.7, 1.1})})};
}

}  // namespace

TEST_SUITE("product") {
  TEST_CASE("degree-0 spectrum of a product is the sum set") {
    const auto t = fixtures::triangle_boundary();
    const auto e = fixtures::simplex_skeleton(2, 1);
    const auto k = kunneth_spectrum(spectra(t), t.complex.betti_numbers(), spectra(e), e.complex.betti_numbers(), 0);
    CHECK(same_multiset(k.full[0], vec({0, 2, 3, 3, 5, 5}), 1e-12));
    const ProductComplex prod(t.complex, t.weights, e.complex, e.weights);
    CHECK(same_multiset(full_spectrum(prod, prod.weights(), 0), vec({0, 2, 3, 3, 5, 5}), 1e-12));
  }

  TEST_CASE("betti numbers add up") {
    const auto t = fixtures::triangle_boundary();
    const ProductComplex torus(t.complex, t.weights, t.complex, t.weights);
    CHECK(torus.betti_numbers() == std::vector<int>{1, 2, 1});
    const auto k = kunneth_spectrum(spectra(t), {1, 1}, spectra(t), {1, 1}, 2);
    CHECK(k.betti == std::vector<int>{1, 2, 1});
    for (int r = 0; r <= 2; ++r) {
      const auto& f = k.full[static_cast<std::size_t>(r)];
      CHECK((f.array().abs() < 1e-12).count() == k.betti[static_cast<std::size_t>(r)]);
    }
  }

  TEST_CASE("laplacian acts on tensors by the sum") {
    const auto a = reweighted_triangle();
    const auto b = fixtures::tetrahedron_boundary();
    const ProductComplex prod(a.complex, a.weights, b.complex, b.weights);
    for (int p = 0; p <= 1; ++p) {
      for (int q = 0; q <= 2; ++q) {
        const Eigenpairs ea = full_eigenpairs(a.complex, a.weights, p);
        const Eigenpairs eb = full_eigenpairs(b.complex, b.weights, q);
        const Eigen::VectorXd u = a.weights[p].cwiseSqrt().cwiseInverse().asDiagonal() * ea.vectors.col(ea.vectors.cols() - 1);
        const Eigen::VectorXd v = b.weights[q].cwiseSqrt().cwiseInverse().asDiagonal() * eb.vectors.col(0);
        const Eigen::VectorXd uv = prod.tensor(p, u, q, v);
        const double lambda = ea.values[ea.values.size() - 1] + eb.values[0];
        const Eigen::VectorXd luv = apply_laplacian(prod, prod.weights(), p + q, uv);
        CHECK((luv - lambda * uv).cwiseAbs().maxCoeff() <= 1e-12 * std::max(1.0, lambda) * uv.cwiseAbs().maxCoeff());
      }
    }
  }

  TEST_CASE("product eigenvalues are sums of factor eigenvalues") {
    const auto a = reweighted_triangle();
    const auto b = fixtures::octahedron_boundary();
    const ProductComplex prod(a.complex, a.weights, b.complex, b.weights);
    const auto k = kunneth_spectrum(spectra(a), a.complex.betti_numbers(), spectra(b), b.complex.betti_numbers(), 3);
    for (int r = 0; r <= 3; ++r) {
      const Eigen::VectorXd direct = full_spectrum(prod, prod.weights(), r);
      CHECK(same_multiset(direct, k.full[static_cast<std::size_t>(r)], 1e-10 * std::max(1.0, direct.maxCoeff())));
      const Eigen::VectorXd c = coexact_spectrum(prod, prod.weights(), r, false).values;
      CHECK(same_multiset(c, k.coexact[static_cast<std::size_t>(r)], 1e-9 * std::max(1.0, direct.maxCoeff())));
    }
  }

  TEST_CASE("complete graph factor gives multiplicity") {
    const auto n1 = fixtures::simplex_skeleton(4, 2);
    const auto n2 = fixtures::triangle_boundary();
    const auto w2 = homothety(n2.weights, std::sqrt(3.0 / 12.0), 1);
    const ProductComplex prod(n1.complex, n1.weights, n2.complex, w2);
    const auto c = coexact_spectrum(prod, prod.weights(), 1, false).values;
    CHECK(c[0] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(leading_multiplicity(c) >= 3);
  }

  TEST_CASE("gap violation is flagged") {
    const auto n1 = fixtures::simplex_skeleton(4, 2);
    std::vector<Eigen::VectorXd> w;
    for (int j = 0; j <= 2; ++j) {
      w.push_back(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n1.complex.dim(j)), j == 2 ? 4.0 : 1.0));
    }
    const WeightSystem w1(n1.complex, w);
    const auto n2 = dumbbell(3, 1, 1e-2).body;
    const ProductComplex prod(n1.complex, w1, n2.complex, n2.weights);
    const auto r = multiplicity_report(prod, n1.complex, w1, n2.complex, n2.weights, 1, 3);
    CHECK_FALSE(r.first_value_matches);
    CHECK_FALSE(r.gap_condition);
    CHECK_FALSE(r.verified);
  }

  TEST_CASE("high multiplicity examples") {
    for (int k : {1, 3, 5}) {
      for (int p : {0, 1, 2}) {
        const auto [prod, r] = high_multiplicity_example(p, k);
        CHECK_MESSAGE(r.verified, "k=" << k << " p=" << p);
        CHECK(r.side_condition);
        CHECK(r.multiplicity >= static_cast<std::size_t>(k));
        CHECK(r.mu1 == doctest::Approx(k + 1.0).epsilon(1e-10));
      }
    }
  }
}

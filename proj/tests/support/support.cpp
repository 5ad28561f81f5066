#include "support.hpp"

#include <cmath>

#include "hodge/dumbbell.hpp"
#include "hodge/family.hpp"
#include "hodge/fixtures.hpp"

namespace hodge::testing {

std::pair<WeightedComplex, std::vector<GluePart>> two_gadget_fixture(int p, double u) {
  WeightedComplex base = fixtures::octahedron_boundary();
  std::vector<GluePart> parts;
  for (int g = 0; g < 2; ++g) {
    const DumbbellGadget d = dumbbell(3, p, u);
    const Simplex site = p == 0 ? Simplex{g} : base.complex.simplices(p)[static_cast<std::size_t>(g)];
    GluePart part;
    part.body = d.body;
    for (const auto& s : d.sites) part.spec.sites.push_back({site, s});
    part.spec.profile = ring_profile(static_cast<int>(d.sites.size()), 0.0, 0.0);
    part.spec.epsilon = 1.0;
    parts.push_back(std::move(part));
  }
  return {std::move(base), std::move(parts)};
}

WeightedComplex two_gadget_complex(int p, double u, double eps) {
  auto [base, parts] = two_gadget_fixture(p, u);
  for (auto& part : parts) part.spec.epsilon = eps;
  return attach(base, parts).result;
}

std::vector<Named> consistency_fixtures() {
  std::vector<Named> out;
  out.push_back({"triangle", fixtures::triangle_boundary()});
  out.push_back({"tetrahedron", fixtures::tetrahedron_boundary()});
  out.push_back({"octahedron", fixtures::octahedron_boundary()});
  out.push_back({"two triangles", fixtures::two_triangles()});
  out.push_back({"3-sphere", fixtures::sphere(3)});
  out.push_back({"K6 2-skeleton", fixtures::simplex_skeleton(6, 2)});
  WeightedComplex o = fixtures::octahedron_boundary();
  std::vector<Eigen::VectorXd> w;
  for (int j = 0; j <= 2; ++j) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(o.complex.dim(j)));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = 1.0 + 0.37 * std::fmod(1.7 * (i + 1) * (j + 2), 3.0);
    w.push_back(v);
  }
  out.push_back({"reweighted octahedron", {o.complex, WeightSystem(o.complex, w)}});
  out.push_back({"dumbbell p=0", dumbbell(3, 0, 1e-2).body});
  out.push_back({"dumbbell p=1", dumbbell(3, 1, 1e-2).body});
  out.push_back({"glued p=0", two_gadget_complex(0, 0.1, 1e-2)});
  out.push_back({"glued p=1", two_gadget_complex(1, 0.1, 1e-2)});
  return out;
}

FamilyEvaluator SyntheticCone::evaluator() const {
  const SyntheticCone c = *this;
  return [c](const ParamPoint& q) {
    const double s = q.lambda2 - c.center.lambda2;
    const double t = q.theta - c.center.theta;
    const Eigen::Vector2d xy = c.a * Eigen::Vector2d(s, t) + c.curvature * Eigen::Vector2d(s * t, s * s - t * t);
    return FamilySample{QuadraticForm2::from_coordinates(xy[0], xy[1], 2.0 * c.value), Eigen::VectorXd()};
  };
}

bool same_multiset(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

}  // namespace hodge::testing

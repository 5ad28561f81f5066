#include "hodge/dumbbell.hpp"

#include <cmath>
#include <map>
#include <string>

#include "hodge/error.hpp"

namespace hodge {

namespace {

constexpr int kRing = 8;

struct Builder {
  std::map<Simplex, double> w;
  void add(Simplex s, double weight) {
    std::sort(s.begin(), s.end());
    w[s] = weight;
  }
  // Adds s with weight and every face not listed yet with `face_weight`.
  void add_closed(Simplex s, double weight, double face_weight) {
    std::sort(s.begin(), s.end());
    const std::size_t k = s.size();
    for (unsigned mask = 1; mask < (1U << k) - 1; ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1U << i)) f.push_back(s[i]);
      }
      w.emplace(f, face_weight);
    }
    w[s] = weight;
  }
  WeightedComplex finish() const {
    std::vector<std::vector<Simplex>> lists;
    for (const auto& [s, _] : w) {
      if (lists.size() < s.size()) lists.resize(s.size());
      lists[s.size() - 1].push_back(s);
    }
    SimplicialComplex k = SimplicialComplex::build(lists);
    std::vector<Eigen::VectorXd> ws;
    for (const auto& list : lists) {
      Eigen::VectorXd v(static_cast<Eigen::Index>(list.size()));
      for (std::size_t i = 0; i < list.size(); ++i) v[static_cast<Eigen::Index>(i)] = w.at(list[i]);
      ws.push_back(std::move(v));
    }
    WeightSystem weights(k, std::move(ws));
    return {std::move(k), std::move(weights)};
  }
};

// Two tetrahedron-boundary lobes joined through a thin wheel. The small
// function mode is +1 on one lobe and -1 on the other.
DumbbellGadget function_dumbbell(int n, double u) {
  DumbbellGadget g;
  g.n = n;
  g.p = 0;
  g.u = u;
  const int a = 8;
  auto lobe = [](int side, int i) { return 4 * side + i; };
  auto r = [](int k) { return 9 + ((k % kRing) + kRing) % kRing; };
  Builder b;
  for (int side = 0; side < 2; ++side) {
    for (int skip = 0; skip < 4; ++skip) {
      Simplex t;
      for (int i = 0; i < 4; ++i) {
        if (i != skip) t.push_back(lobe(side, i));
      }
      b.add_closed(t, 1.0, 1.0);
    }
  }
  b.add({a}, u);
  for (int k = 0; k < kRing; ++k) b.add({r(k)}, u);
  for (int k = 0; k < kRing; ++k) b.add_closed({a, r(k), r(k + 1)}, u, u);
  b.add({lobe(0, 0), r(2)}, u);
  b.add({lobe(1, 0), r(6)}, u);
  g.body = b.finish();

  for (int i = 0; i < 4; ++i) {
    g.involution[lobe(0, i)] = lobe(1, i);
    g.involution[lobe(1, i)] = lobe(0, i);
  }
  for (int k = 0; k < kRing; ++k) g.involution[r(k)] = r(k + kRing / 2);
  g.attach_vertex = a;
  for (int k = 0; k < kRing; ++k) {
    g.ring.push_back(r(k));
    g.sites.push_back({r(k)});
  }
  g.floor_c = 0.15;
  g.volume_bound = 8.0 + 9.0 * kDumbbellMaxU;
  return g;
}

// A cylinder of unit squares (each split into four triangles around a center)
// closed by two caps whose weights vanish with u. The small 1-form mode
// circulates around the cylinder.
DumbbellGadget form_dumbbell(int n, double u) {
  DumbbellGadget g;
  g.n = n;
  g.p = 1;
  g.u = u;
  constexpr int cols = 8;
  auto wrap = [](int i) { return ((i % cols) + cols) % cols; };
  auto V = [&](int i, int j) { return (j + 1) * cols + wrap(i); };       // rows j = -1, 0, 1
  auto C = [&](int i, int j) { return 3 * cols + (j + 1) * cols + wrap(i); };  // cells j = -1, 0
  auto H = [&](int sign) { return sign > 0 ? 5 * cols : 5 * cols + 1; };

  Builder b;
  for (int i = 0; i < cols; ++i) {
    for (int j = -1; j < 1; ++j) {
      const int corners[4] = {V(i, j), V(i + 1, j), V(i + 1, j + 1), V(i, j + 1)};
      for (int k = 0; k < 4; ++k) b.add_closed({C(i, j), corners[k], corners[(k + 1) % 4]}, 1.0, 1.0);
    }
  }
  for (int sign : {1, -1}) {
    const int h = H(sign);
    for (int i = 0; i < cols; ++i) {
      b.add_closed({h, V(i, sign), V(i + 1, sign)}, u, 1.0);
    }
    b.add({h}, u * u);
    for (int i = 0; i < cols; ++i) b.add({h, V(i, sign)}, u * u);
  }
  g.body = b.finish();

  for (int i = 0; i < cols; ++i) {
    for (int j = -1; j <= 1; ++j) g.involution[V(i, j)] = V(-i, -j);
    for (int j = -1; j < 1; ++j) g.involution[C(i, j)] = C(-i - 1, -j - 1);
  }
  g.involution[H(1)] = H(-1);
  g.involution[H(-1)] = H(1);

  g.attach_vertex = V(0, 0);
  g.ring = {V(1, 0), C(0, 0), V(0, 1), C(-1, 0), V(-1, 0), C(-1, -1), V(0, -1), C(0, -1)};
  for (int v : g.ring) g.sites.push_back({g.attach_vertex, v});
  g.floor_c = 0.15;
  g.volume_bound = 40.0 + 2.0 * kDumbbellMaxU * kDumbbellMaxU;
  return g;
}

}  // namespace

const std::vector<DumbbellSupport>& dumbbell_support() {
  static const std::vector<DumbbellSupport> table{{0, 2, 6}, {1, 3, 6}};
  return table;
}

DumbbellGadget dumbbell(int n, int p, double u) {
  bool supported = false;
  for (const auto& e : dumbbell_support()) supported = supported || (e.p == p && e.n_min <= n && n <= e.n_max);
  if (!supported) {
    throw Error(ErrorCode::UnsupportedDegree, "no dumbbell for n=" + std::to_string(n) + ", p=" + std::to_string(p));
  }
  if (!(u > 0.0) || u > kDumbbellMaxU) {
    throw Error(ErrorCode::InvalidArgument, "u must lie in (0, " + std::to_string(kDumbbellMaxU) + "]");
  }
  return p == 0 ? function_dumbbell(n, u) : form_dumbbell(n, u);
}

double symmetry_ratio(const SimplicialComplex& k, const WeightSystem& w, const VertexMap& f, const Cochain& phi) {
  const Cochain pulled = pullback(k, f, phi);
  return inner(w, pulled, phi) / inner(w, phi, phi);
}

int odd_symmetry_sign(const SimplicialComplex& k, const WeightSystem& w, const VertexMap& f, const Cochain& phi) {
  return symmetry_ratio(k, w, f, phi) < 0.0 ? -1 : 1;
}

int check_odd_symmetry(const DumbbellGadget& g, const CoexactSpectrum& s, std::size_t i) {
  if (i >= s.size() || s.cochains.cols() != s.values.size()) {
    throw Error(ErrorCode::InvalidArgument, "eigencochain index out of range");
  }
  const auto ii = static_cast<Eigen::Index>(i);
  const double mu = s.values[ii];
  const bool close_below = ii > 0 && mu - s.values[ii - 1] < 1e-8;
  const bool close_above = ii + 1 < s.values.size() && s.values[ii + 1] - mu < 1e-8;
  if (close_below || close_above) {
    throw Error(ErrorCode::EigenvalueNotSimple, "eigenvalue " + std::to_string(mu) + " has a neighbor within 1e-8");
  }
  return odd_symmetry_sign(g.body.complex, g.body.weights, g.involution, {s.degree, s.cochains.col(ii)});
}

}  // namespace hodge

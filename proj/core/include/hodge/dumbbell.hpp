#pragma once

#include <vector>

#include "hodge/cochain.hpp"
#include "hodge/spectral.hpp"
#include "hodge/weights.hpp"

namespace hodge {

/// A complex with one small coexact eigenvalue in degree p, odd under an
/// involution, and every other low eigenvalue bounded below by floor_c.
struct DumbbellGadget {
  int n = 0;
  int p = 0;
  double u = 0.0;
  WeightedComplex body;
  VertexMap involution;
  std::vector<int> ring;  // cyclic, even length; the involution acts as a half-turn
  int attach_vertex = 0;  // fixed by the involution
  /// p-simplices used as attachment sites, one per ring vertex, vertices in
  /// correspondence order (the attach vertex first when p = 1).
  std::vector<Simplex> sites;
  double floor_c = 0.0;
  double volume_bound = 0.0;
};

struct DumbbellSupport {
  int p;
  int n_min;
  int n_max;
};

inline constexpr double kDumbbellMaxU = 0.1;

const std::vector<DumbbellSupport>& dumbbell_support();

/// Throws UnsupportedDegree outside the support table and InvalidArgument for
/// u outside (0, kDumbbellMaxU].
DumbbellGadget dumbbell(int n, int p, double u);

/// <f^*φ, φ>_W / <φ, φ>_W.
double symmetry_ratio(const SimplicialComplex& k, const WeightSystem& w, const VertexMap& f, const Cochain& phi);

/// Sign of the ratio above, without a simplicity check.
int odd_symmetry_sign(const SimplicialComplex& k, const WeightSystem& w, const VertexMap& f, const Cochain& phi);

/// Sign for the i-th (0-based) eigencochain of `s`. Throws EigenvalueNotSimple
/// when a neighbor lies within 1e-8.
int check_odd_symmetry(const DumbbellGadget& g, const CoexactSpectrum& s, std::size_t i);

}  // namespace hodge

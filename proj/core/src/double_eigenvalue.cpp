#include "hodge/double_eigenvalue.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hodge/error.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

namespace {

constexpr double kPi = 3.14159265358979323846;

double lowest(const WeightedComplex& m, int q) {
  const auto s = coexact_spectrum(m.complex, m.weights, q, false);
  return s.values.size() ? s.values[0] : INFINITY;
}

}  // namespace

DoubleEigenvalueChecks verify_double_eigenvalue(const WeightedComplex& m, int p, int n, double nu, double ceiling,
                                                double volume) {
  // rebuild from the simplex lists so nothing cached is reused
  std::vector<std::vector<Simplex>> lists;
  for (int j = 0; j <= m.complex.top_dim(); ++j) lists.push_back(m.complex.simplices(j));
  const SimplicialComplex k = SimplicialComplex::build(lists);
  const WeightSystem w(k, m.weights.all());

  DoubleEigenvalueChecks c;
  const auto s = coexact_spectrum(k, w, p, false);
  c.mu1 = s.values.size() > 0 ? s.values[0] : NAN;
  c.mu2 = s.values.size() > 1 ? s.values[1] : NAN;
  c.mu3 = s.values.size() > 2 ? s.values[2] : INFINITY;
  c.double_ok = std::abs(c.mu1 - nu) <= 1e-6 * nu && std::abs(c.mu2 - nu) <= 1e-6 * nu;
  c.third_ok = c.mu3 > ceiling;
  c.other_ok = true;
  for (int q = 1; q <= (n - 1) / 2; ++q) {
    if (q == p || q >= k.top_dim()) continue;
    const auto t = coexact_spectrum(k, w, q, false);
    const double v = t.values.size() ? t.values[0] : INFINITY;
    c.other_degrees.emplace_back(q, v);
    c.other_ok = c.other_ok && v > ceiling;
  }
  c.volume = w.volume();
  c.volume_ok = c.volume < volume;
  return c;
}

DoubleEigenvalueResult double_eigenvalue_metric(const WeightedComplex& base, int p, double nu, double ceiling,
                                                double volume, const DoubleEigenvalueOptions& opt) {
  if (!(nu > 0.0) || !(nu < ceiling)) throw Error(ErrorCode::InvalidArgument, "need 0 < nu < C");
  if (!(volume > 0.0)) throw Error(ErrorCode::InvalidArgument, "volume budget must be positive");
  const int n = opt.n;
  const double eta = nu / 4.0;
  const double lo = nu / 2.0;
  const double hi = 1.5 * nu;

  // gadget: off-window eigenvalues above 2C once tuned anywhere in [nu - eta, nu + eta]
  double u = 0.0;
  for (double cand : opt.u_candidates) {
    const DumbbellGadget g = dumbbell(n, p, cand);
    const double mu = lowest(g.body, p);
    double other = coexact_spectrum(g.body.complex, g.body.weights, p, false).values[1];
    for (int q = 0; q < g.body.complex.top_dim(); ++q) {
      if (q != p) other = std::min(other, lowest(g.body, q));
    }
    if ((nu - eta) * other / mu > 2.0 * ceiling) {
      u = cand;
      break;
    }
  }
  if (u == 0.0) throw Error(ErrorCode::InvalidArgument, "no gadget keeps its other eigenvalues above 2C");

  // base: spectrum above 2C in every degree, volume below V/10
  WeightedComplex b = base;
  double floor = INFINITY;
  for (int q = 0; q < b.complex.top_dim(); ++q) floor = std::min(floor, lowest(b, q));
  double c = std::sqrt(floor / (3.0 * ceiling));
  if (std::isfinite(floor)) c = std::min(c, 1.0);
  c = std::min(c, std::pow(volume / (20.0 * b.weights.volume()), 1.0 / n));
  b.weights = homothety(b.weights, c, n);

  DoubleEigenvalueResult out;
  out.u = u;
  out.epsilon = opt.epsilon;
  out.theta_offset = opt.theta_offset;
  for (int halving = 0;; ++halving) {
    FamilyConfig cfg;
    cfg.system = {n, p, u, out.epsilon, 0.9};
    cfg.lambda1 = nu;
    cfg.eta = eta;
    cfg.window_lo = lo;
    cfg.window_hi = hi;
    cfg.theta_offset = out.theta_offset;
    try {
      GluedFamily fam(b, cfg);
      DegeneracyOptions dopt;
      dopt.tol = 1e-12;
      out.degeneracy = find_degeneracy(fam.evaluator(), fam.domain(), dopt);
      try {
        out.holonomy = eigenline_holonomy(fam.evaluator(), fam.domain().boundary());
      } catch (const Error&) {
        out.holonomy = 0;
      }
      const WeightedComplex at = fam.complex_at(out.degeneracy.point);
      out.final_scale = std::sqrt(out.degeneracy.double_value / nu);
      out.metric = {at.complex, homothety(at.weights, out.final_scale, n)};
      break;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::WindowPollution && halving < opt.max_epsilon_halvings) {
        out.epsilon *= 0.5;
        continue;
      }
      if ((e.code() == ErrorCode::BoundaryDegeneracy || e.code() == ErrorCode::GuardViolated) &&
          out.origin_shifts < opt.max_origin_shifts) {
        // the crossing sits on the boundary of D: move the θ origin
        out.theta_offset += kPi / 4.0;
        ++out.origin_shifts;
        continue;
      }
      throw;
    }
  }

  out.checks = verify_double_eigenvalue(out.metric, p, n, nu, ceiling, volume);
  if (!out.checks.volume_ok) {
    throw Error(ErrorCode::VolumeBudgetExceeded, "volume " + std::to_string(out.checks.volume) + " exceeds " +
                                                     std::to_string(volume));
  }
  return out;
}

}  // namespace hodge

#include "hodge/prescribe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <string>

#include "hodge/dumbbell.hpp"
#include "hodge/error.hpp"
#include "hodge/family.hpp"
#include "hodge/parallel.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

namespace {

constexpr int kDegree = 1;

struct Group {
  double value = 0.0;
  int multiplicity = 1;
  std::size_t first = 0;  // gadget indices
  std::size_t second = 0;
};

double lowest(const WeightedComplex& m, int q) {
  const auto s = coexact_spectrum(m.complex, m.weights, q, false);
  return s.values.size() ? s.values[0] : std::numeric_limits<double>::infinity();
}

}  // namespace

double TargetSpectrum::max_target() const {
  double m = 0.0;
  for (const auto& [p, v] : targets) {
    for (double x : v) m = std::max(m, x);
  }
  return m;
}

void validate(const TargetSpectrum& t) {
  if (!(t.volume > 0.0)) throw Error(ErrorCode::InvalidArgument, "volume must be positive");
  if (!(t.tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  for (const auto& [p, v] : t.targets) {
    if (v.empty()) throw Error(ErrorCode::InvalidArgument, "degree " + std::to_string(p) + " has no targets");
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!(v[i] > 0.0)) throw Error(ErrorCode::InvalidArgument, "targets must be positive");
      if (i > 0 && v[i] < v[i - 1]) throw Error(ErrorCode::InvalidArgument, "targets must be sorted");
      if (i >= 2 && v[i] == v[i - 2]) {
        throw Error(ErrorCode::TargetsTooClose, "value " + std::to_string(v[i]) + " requested more than twice");
      }
      if (i > 0 && v[i] != v[i - 1] && v[i] - v[i - 1] <= 100.0 * t.tol) {
        throw Error(ErrorCode::TargetsTooClose, "distinct targets " + std::to_string(v[i - 1]) + " and " +
                                                    std::to_string(v[i]) + " are too close");
      }
    }
  }
  if (!(t.ceiling > t.max_target())) throw Error(ErrorCode::InvalidArgument, "ceiling must exceed every target");
}

TargetSpectrum target_spectrum_from_json(const nlohmann::json& j) {
  try {
    TargetSpectrum t;
    for (const auto& [key, vals] : j.at("targets").items()) {
      std::vector<double> v = vals.get<std::vector<double>>();
      std::sort(v.begin(), v.end());
      t.targets[std::stoi(key)] = std::move(v);
    }
    t.volume = j.at("volume").get<double>();
    t.tol = j.value("tol", 1e-3);
    t.ceiling = j.value("ceiling", 10.0);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

PrescribeChecks verify_prescription(const WeightedComplex& m, const TargetSpectrum& t) {
  std::vector<std::vector<Simplex>> lists;
  for (int j = 0; j <= m.complex.top_dim(); ++j) lists.push_back(m.complex.simplices(j));
  const SimplicialComplex k = SimplicialComplex::build(lists);
  const WeightSystem w(k, m.weights.all());

  PrescribeChecks c;
  c.targets_ok = true;
  c.ceiling_ok = true;
  const double top = t.max_target();
  for (const auto& [p, v] : t.targets) {
    const auto s = coexact_spectrum(k, w, p, false);
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double mu = i < s.size() ? s.values[static_cast<Eigen::Index>(i)] : NAN;
      if (p == kDegree) c.achieved.push_back(mu);
      const double dev = std::abs(mu - v[i]);
      c.max_deviation = std::max(c.max_deviation, std::isnan(dev) ? INFINITY : dev);
    }
    const double next = v.size() < s.size() ? s.values[static_cast<Eigen::Index>(v.size())] : INFINITY;
    if (p == kDegree) c.next = next;
    c.ceiling_ok = c.ceiling_ok && next > top;
  }
  c.targets_ok = c.max_deviation <= t.tol;
  c.volume = w.volume();
  c.volume_ok = std::abs(c.volume - t.volume) <= t.tol;
  return c;
}

PrescribeResult prescribe_spectrum(const WeightedComplex& base, const TargetSpectrum& t, const PrescribeOptions& opt) {
  validate(t);
  for (const auto& [p, v] : t.targets) {
    if (p != kDegree) throw Error(ErrorCode::UnsupportedDegree, "only degree 1 targets are supported");
  }
  const std::vector<double>& nu = t.targets.at(kDegree);
  const int n = opt.n;

  std::vector<Group> groups;
  for (double x : nu) {
    if (!groups.empty() && groups.back().value == x) {
      groups.back().multiplicity = 2;
    } else {
      groups.push_back({x, 1, 0, 0});
    }
  }
  double gap = nu.front();
  for (std::size_t i = 1; i < groups.size(); ++i) gap = std::min(gap, groups[i].value - groups[i - 1].value);
  const double delta = 0.45 * gap;
  const double eta = delta / 2.0;

  // gadget: off-window eigenvalues above 2C in the whole tuning range
  PrescribeResult out;
  for (double cand : opt.u_candidates) {
    const DumbbellGadget g = dumbbell(n, kDegree, cand);
    const auto s = coexact_spectrum(g.body.complex, g.body.weights, kDegree, false);
    double other = s.values[1];
    for (int q = 0; q < g.body.complex.top_dim(); ++q) {
      if (q != kDegree) other = std::min(other, lowest(g.body, q));
    }
    if ((nu.front() - delta) * other / s.values[0] > 2.0 * t.ceiling) {
      out.u = cand;
      break;
    }
  }
  if (out.u == 0.0) throw Error(ErrorCode::InvalidArgument, "no gadget keeps its other eigenvalues above 2C");

  // base: spectrum above 2C
  WeightedComplex b = base;
  double floor = INFINITY;
  for (int q = 0; q < b.complex.top_dim(); ++q) floor = std::min(floor, lowest(b, q));
  if (std::isfinite(floor)) b.weights = homothety(b.weights, std::min(1.0, std::sqrt(floor / (3.0 * t.ceiling))), n);

  // sites: one base edge per group, pairs share theirs
  const auto& edges = b.complex.simplices(kDegree);
  if (groups.size() > edges.size()) throw Error(ErrorCode::InvalidArgument, "base has too few edges for the targets");
  std::vector<Simplex> sites;
  std::vector<GadgetTuning> tun;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    auto& g = groups[gi];
    g.first = sites.size();
    sites.push_back(edges[gi]);
    tun.push_back({g.value, 0.0});
    g.second = g.first;
    if (g.multiplicity == 2) {
      g.second = sites.size();
      sites.push_back(edges[gi]);
      tun.push_back({g.value, 0.0});
    }
  }
  auto system = std::make_shared<GluedSystem>(b, SystemConfig{n, kDegree, out.u, opt.epsilon, 0.9}, sites);

  std::vector<std::size_t> pairs;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    if (groups[gi].multiplicity == 2) pairs.push_back(gi);
  }
  double previous = INFINITY;
  bool converged = false;
  for (int it = 1; it <= opt.max_iterations; ++it) {
    out.iterations = it;
    // certify every pair against the current tunings of the others
    std::vector<Degeneracy> found(pairs.size());
    std::vector<GadgetTuning> second(pairs.size());
    parallel_for(pairs.size(), [&](std::size_t k) {
      const Group& g = groups[pairs[k]];
      GluedFamily fam(system, tun, g.first, g.second, tun[g.first].lambda, eta, g.value - delta, g.value + delta);
      DegeneracyOptions dopt;
      dopt.tol = 1e-12;
      found[k] = find_degeneracy(fam.evaluator(), fam.domain(), dopt);
      second[k] = fam.tunings(found[k].point)[g.second];
    });
    out.doubles.clear();
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      tun[groups[pairs[k]].second] = second[k];
      out.doubles.push_back({groups[pairs[k]].value, found[k]});
    }

    const WeightSystem w = system->weights(tun);
    const auto s = coexact_spectrum(system->complex(), w, kDegree, false);
    double worst = 0.0;
    std::vector<double> measured(groups.size());
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
      const Group& g = groups[gi];
      const auto win = window_of(s, g.value - delta, g.value + delta);
      if (win.values.size() != g.multiplicity) {
        throw Error(ErrorCode::WindowPollution, "window around " + std::to_string(g.value) + " holds " +
                                                    std::to_string(win.values.size()) + " eigenvalues");
      }
      measured[gi] = win.values.mean();
      for (Eigen::Index i = 0; i < win.values.size(); ++i) worst = std::max(worst, std::abs(win.values[i] - g.value));
    }
    out.deviation_history.push_back(worst);
    if (worst > previous) {
      throw Error(ErrorCode::NonConvergence, "target deviation grew from " + std::to_string(previous) + " to " +
                                                 std::to_string(worst));
    }
    previous = worst;
    if (worst <= t.tol / 4.0) {
      converged = true;
      break;
    }
    for (std::size_t gi = 0; gi < groups.size(); ++gi) tun[groups[gi].first].lambda += groups[gi].value - measured[gi];
  }
  if (!converged) {
    throw Error(ErrorCode::NonConvergence, "targets not met after " + std::to_string(opt.max_iterations) +
                                               " iterations");
  }

  // volume knob: base vertex weights
  const WeightSystem w = system->weights(tun);
  const double base_mass = system->base().weights.volume();
  const double rest = w.volume() - base_mass;
  const double factor = (t.volume - rest) / base_mass;
  if (!(factor > 0.0)) {
    throw Error(ErrorCode::VolumeBudgetExceeded, "gadgets alone have volume " + std::to_string(rest));
  }
  system->set_base_weights(scale_degree(system->base().weights, 0, factor));
  out.metric = system->complex_at(tun);

  out.checks = verify_prescription(out.metric, t);
  out.checks.doubles_ok = true;
  for (const auto& d : out.doubles) {
    out.checks.doubles_ok = out.checks.doubles_ok && d.degeneracy.winding != 0;
  }
  return out;
}

nlohmann::json prescription_report(const PrescribeResult& r, const TargetSpectrum& t) {
  nlohmann::json j;
  j["degree"] = kDegree;
  j["targets"] = t.targets.count(kDegree) ? t.targets.at(kDegree) : std::vector<double>{};
  j["achieved"] = r.checks.achieved;
  j["next_eigenvalue"] = r.checks.next;
  j["max_deviation"] = r.checks.max_deviation;
  j["volume"] = r.checks.volume;
  j["target_volume"] = t.volume;
  j["tol"] = t.tol;
  j["iterations"] = r.iterations;
  j["deviation_history"] = r.deviation_history;
  j["gadget_u"] = r.u;
  nlohmann::json doubles = nlohmann::json::array();
  for (const auto& d : r.doubles) {
    doubles.push_back({{"value", d.value},
                       {"lambda2", d.degeneracy.point.lambda2},
                       {"theta", d.degeneracy.point.theta},
                       {"gap", d.degeneracy.gap},
                       {"winding", d.degeneracy.winding}});
  }
  j["doubles"] = doubles;
  j["checks"] = {{"targets", r.checks.targets_ok},
                 {"ceiling", r.checks.ceiling_ok},
                 {"volume", r.checks.volume_ok},
                 {"doubles", r.checks.doubles_ok},
                 {"passed", r.checks.passed()}};
  return j;
}

}  // namespace hodge

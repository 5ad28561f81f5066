#include "hodge/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "hodge/error.hpp"

namespace hodge {

namespace {

constexpr double kPi = 3.14159265358979323846;

double increment(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return std::atan2(a.x() * b.y() - a.y() * b.x(), a.dot(b));
}

Eigen::Vector2d coordinates(const FamilySample& s) { return {s.form.x(), s.form.y()}; }

// Angle swept along t in [0, 1], refined until every step turns by less than pi/2.
class AngleWalker {
 public:
  AngleWalker(std::function<Eigen::Vector2d(double)> at, int max_depth)
      : at_(std::move(at)), max_depth_(max_depth) {}

  double sweep(int samples) {
    double total = 0.0;
    double t_prev = 0.0;
    Eigen::Vector2d p_prev = at_(0.0);
    for (int k = 1; k <= samples; ++k) {
      const double t = static_cast<double>(k) / samples;
      const Eigen::Vector2d p = at_(t);
      total += step(t_prev, p_prev, t, p, 0);
      t_prev = t;
      p_prev = p;
    }
    return total;
  }

 private:
  double step(double ta, const Eigen::Vector2d& pa, double tb, const Eigen::Vector2d& pb, int depth) {
    const double inc = increment(pa, pb);
    if (std::abs(inc) < 0.5 * kPi) return inc;
    if (depth >= max_depth_) throw Error(ErrorCode::RefinementBudgetExceeded, "angle increment stays above pi/2");
    const double tm = 0.5 * (ta + tb);
    const Eigen::Vector2d pm = at_(tm);
    return step(ta, pa, tm, pm, depth + 1) + step(tm, pm, tb, pb, depth + 1);
  }

  std::function<Eigen::Vector2d(double)> at_;
  int max_depth_;
};

ParamPoint lerp(const ParamPoint& a, const ParamPoint& b, double t) {
  return {a.lambda2 + t * (b.lambda2 - a.lambda2), a.theta + t * (b.theta - a.theta)};
}

int round_winding(double total) { return static_cast<int>(std::lround(total / (2.0 * kPi))); }

double default_guard(const std::vector<ParamPoint>& loop) {
  double lo = loop.front().lambda2, hi = lo;
  for (const auto& p : loop) {
    lo = std::min(lo, p.lambda2);
    hi = std::max(hi, p.lambda2);
  }
  return 1e-6 * 0.5 * (hi - lo);
}

// Samples cached on an integer lattice over D so that neighboring cells reuse
// the points of shared edges.
class LatticeSampler {
 public:
  static constexpr std::int64_t kSide = std::int64_t{1} << 40;

  LatticeSampler(const FamilyEvaluator& f, const DomainRect& d, double guard, std::size_t budget)
      : f_(f), d_(d), guard_(guard), budget_(budget) {}

  ParamPoint point(std::int64_t i, std::int64_t j) const {
    const long double s = static_cast<long double>(i) / kSide;
    const long double t = static_cast<long double>(j) / kSide;
    return {static_cast<double>(d_.lambda_lo + s * (d_.lambda_hi - d_.lambda_lo)),
            static_cast<double>(d_.theta_lo + t * (d_.theta_hi - d_.theta_lo))};
  }

  const FamilySample& sample(std::int64_t i, std::int64_t j) {
    const auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      if (cache_.size() >= budget_) throw Error(ErrorCode::RefinementBudgetExceeded, "evaluation budget exhausted");
      it = cache_.emplace(key, f_(point(i, j))).first;
    }
    return it->second;
  }

  Eigen::Vector2d xy(std::int64_t i, std::int64_t j) {
    const Eigen::Vector2d v = coordinates(sample(i, j));
    if (v.norm() < guard_) {
      tripped = std::make_pair(i, j);
      const ParamPoint p = point(i, j);
      throw Error(ErrorCode::GuardViolated, "|(x,y)| = " + std::to_string(v.norm()) + " at lambda2=" +
                                                std::to_string(p.lambda2) + ", theta=" + std::to_string(p.theta));
    }
    return v;
  }

  std::size_t evaluations() const { return cache_.size(); }
  void set_guard(double g) { guard_ = g; }

  // Sample that tripped the guard most recently.
  std::optional<std::pair<std::int64_t, std::int64_t>> tripped;

 private:
  const FamilyEvaluator& f_;
  DomainRect d_;
  double guard_;
  std::size_t budget_;
  std::map<std::pair<std::int64_t, std::int64_t>, FamilySample> cache_;
};

struct Cell {
  std::int64_t i0, i1, j0, j1;
};

double edge_angle(LatticeSampler& s, std::int64_t ai, std::int64_t aj, std::int64_t bi, std::int64_t bj, int samples,
                  int max_depth) {
  auto at = [&](double t) {
    const long double lt = t;
    const auto i = static_cast<std::int64_t>(std::llround(ai + lt * static_cast<long double>(bi - ai)));
    const auto j = static_cast<std::int64_t>(std::llround(aj + lt * static_cast<long double>(bj - aj)));
    return s.xy(i, j);
  };
  return AngleWalker(at, max_depth).sweep(samples);
}

int cell_winding(LatticeSampler& s, const Cell& c, int samples, int max_depth) {
  double total = 0.0;
  total += edge_angle(s, c.i1, c.j0, c.i0, c.j0, samples, max_depth);
  total += edge_angle(s, c.i0, c.j0, c.i0, c.j1, samples, max_depth);
  total += edge_angle(s, c.i0, c.j1, c.i1, c.j1, samples, max_depth);
  total += edge_angle(s, c.i1, c.j1, c.i1, c.j0, samples, max_depth);
  return round_winding(total);
}

}  // namespace

DomainRect DomainRect::around(double lambda1, double eta) {
  if (!(eta > 0.0)) throw Error(ErrorCode::InvalidArgument, "eta must be positive");
  return {lambda1 - eta, lambda1 + eta, 0.0, kPi};
}

ParamPoint DomainRect::corner(int i) const {
  switch (i) {
    case 0: return {lambda_hi, theta_lo};
    case 1: return {lambda_lo, theta_lo};
    case 2: return {lambda_lo, theta_hi};
    case 3: return {lambda_hi, theta_hi};
    default: throw Error(ErrorCode::InvalidArgument, "corner index must be 0..3");
  }
}

std::vector<ParamPoint> DomainRect::boundary() const { return {corner(0), corner(1), corner(2), corner(3)}; }

ParamPoint DomainRect::center() const { return {0.5 * (lambda_lo + lambda_hi), 0.5 * (theta_lo + theta_hi)}; }

double DomainRect::diameter() const { return std::hypot(lambda_hi - lambda_lo, theta_hi - theta_lo); }

int loop_winding(const FamilyEvaluator& f, const std::vector<ParamPoint>& loop, const LoopOptions& opt) {
  if (loop.size() < 2) throw Error(ErrorCode::InvalidArgument, "a loop needs at least two vertices");
  if (opt.samples_per_edge < 1) throw Error(ErrorCode::InvalidArgument, "samples per edge must be positive");
  const double guard = opt.guard >= 0.0 ? opt.guard : default_guard(loop);
  std::size_t evals = 0;
  double total = 0.0;
  for (std::size_t e = 0; e < loop.size(); ++e) {
    const ParamPoint a = loop[e];
    const ParamPoint b = loop[(e + 1) % loop.size()];
    auto at = [&](double t) {
      if (++evals > opt.max_evaluations) throw Error(ErrorCode::RefinementBudgetExceeded, "evaluation budget exhausted");
      const ParamPoint p = lerp(a, b, t);
      const Eigen::Vector2d v = coordinates(f(p));
      if (v.norm() < guard) {
        throw Error(ErrorCode::GuardViolated, "|(x,y)| = " + std::to_string(v.norm()) + " at lambda2=" +
                                                  std::to_string(p.lambda2) + ", theta=" + std::to_string(p.theta));
      }
      return v;
    };
    total += AngleWalker(at, opt.max_depth).sweep(opt.samples_per_edge);
  }
  return round_winding(total);
}

int eigenline_holonomy(const FamilyEvaluator& f, const std::vector<ParamPoint>& loop, const HolonomyOptions& opt) {
  if (loop.size() < 2) throw Error(ErrorCode::InvalidArgument, "a loop needs at least two vertices");
  std::size_t evals = 0;
  auto lower = [&](const ParamPoint& p) {
    if (++evals > opt.max_evaluations) throw Error(ErrorCode::RefinementBudgetExceeded, "evaluation budget exhausted");
    const FamilySample s = f(p);
    const double gap = 2.0 * s.form.radius();
    if (gap < opt.gap_floor) {
      throw Error(ErrorCode::GapCollapsedOnLoop, "gap " + std::to_string(gap) + " at lambda2=" +
                                                     std::to_string(p.lambda2) + ", theta=" + std::to_string(p.theta));
    }
    Eigen::VectorXd v = s.lower.size() ? s.lower : Eigen::VectorXd(s.form.lower_vector());
    return Eigen::VectorXd(v.normalized());
  };
  // transports `va` from ta to tb along one edge, bisecting weak overlaps
  std::function<Eigen::VectorXd(const ParamPoint&, const ParamPoint&, double, const Eigen::VectorXd&, double, int)>
      transport = [&](const ParamPoint& a, const ParamPoint& b, double ta, const Eigen::VectorXd& va, double tb,
                      int depth) -> Eigen::VectorXd {
    Eigen::VectorXd vb = lower(lerp(a, b, tb));
    const double o = va.dot(vb);
    if (std::abs(o) < opt.min_overlap) {
      if (depth >= opt.max_depth) throw Error(ErrorCode::RefinementBudgetExceeded, "eigenvector overlap stays small");
      const double tm = 0.5 * (ta + tb);
      const Eigen::VectorXd vm = transport(a, b, ta, va, tm, depth + 1);
      return transport(a, b, tm, vm, tb, depth + 1);
    }
    return o < 0.0 ? Eigen::VectorXd(-vb) : vb;
  };
  const Eigen::VectorXd start = lower(loop.front());
  Eigen::VectorXd v = start;
  for (std::size_t e = 0; e < loop.size(); ++e) {
    const ParamPoint a = loop[e];
    const ParamPoint b = loop[(e + 1) % loop.size()];
    double t_prev = 0.0;
    for (int k = 1; k <= opt.samples_per_edge; ++k) {
      const double t = static_cast<double>(k) / opt.samples_per_edge;
      v = transport(a, b, t_prev, v, t, 0);
      t_prev = t;
    }
  }
  return v.dot(start) < 0.0 ? -1 : 1;
}

namespace {

// Newton steps on (x, y) that stay inside the final cell; a step is kept
// only if it shrinks the gap.
std::size_t polish(const FamilyEvaluator& f, Degeneracy& out, double gap_tol) {
  const DomainRect& c = out.cell;
  const double hl = 1e-3 * (c.lambda_hi - c.lambda_lo);
  const double ht = 1e-3 * (c.theta_hi - c.theta_lo);
  std::size_t evaluations = 0;
  for (int it = 0; it < 12 && out.gap >= gap_tol; ++it) {
    const ParamPoint a = out.point;
    const Eigen::Vector2d xy = coordinates(f(a));
    Eigen::Matrix2d j;
    j.col(0) = (coordinates(f({a.lambda2 + hl, a.theta})) - coordinates(f({a.lambda2 - hl, a.theta}))) / (2 * hl);
    j.col(1) = (coordinates(f({a.lambda2, a.theta + ht})) - coordinates(f({a.lambda2, a.theta - ht}))) / (2 * ht);
    evaluations += 5;
    const Eigen::JacobiSVD<Eigen::Matrix2d> svd(j, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (!(svd.singularValues()[1] > 1e-12 * svd.singularValues()[0])) break;
    const Eigen::Vector2d step = svd.solve(-xy);
    const ParamPoint b{std::clamp(a.lambda2 + step[0], c.lambda_lo, c.lambda_hi),
                       std::clamp(a.theta + step[1], c.theta_lo, c.theta_hi)};
    const FamilySample sb = f(b);
    ++evaluations;
    const double gap = 2.0 * sb.form.radius();
    if (!(gap < out.gap)) break;
    out.point = b;
    out.gap = gap;
    out.double_value = 0.5 * sb.form.trace();
  }
  return evaluations;
}

}  // namespace

Degeneracy find_degeneracy(const FamilyEvaluator& f, const DomainRect& d, const DegeneracyOptions& opt) {
  if (!(d.lambda_lo < d.lambda_hi) || !(d.theta_lo < d.theta_hi)) {
    throw Error(ErrorCode::InvalidArgument, "empty parameter domain");
  }
  const double eta = d.eta();
  const double guard = opt.guard >= 0.0 ? opt.guard : 1e-6 * eta;
  const double gap_tol = opt.gap_tol >= 0.0 ? opt.gap_tol : 1e-8 * eta;
  constexpr std::int64_t N = LatticeSampler::kSide;
  LatticeSampler s(f, d, guard, opt.max_evaluations);

  Degeneracy out;
  Cell cell{0, N, 0, N};
  try {
    out.winding = cell_winding(s, cell, opt.boundary_samples, 60);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::GuardViolated) throw Error(ErrorCode::BoundaryDegeneracy, std::string("on the boundary of D: ") + e.what());
    throw;
  }
  if (out.winding == 0) throw Error(ErrorCode::NoCertificate, "winding of (x,y) along the boundary of D is 0");

  static constexpr double kShifts[] = {0.0, 0.1, -0.1, 0.2, -0.2, 0.3};
  int winding = out.winding;
  auto rect_of = [&](const Cell& c) {
    const ParamPoint lo = s.point(c.i0, c.j0);
    const ParamPoint hi = s.point(c.i1, c.j1);
    return DomainRect{lo.lambda2, hi.lambda2, lo.theta, hi.theta};
  };
  // Inside D a sample closer than gap_tol / 2 already satisfies the stopping rule.
  s.set_guard(0.5 * gap_tol);
  for (int depth = 0;; ++depth) {
    const std::int64_t ci = cell.i0 + (cell.i1 - cell.i0) / 2;
    const std::int64_t cj = cell.j0 + (cell.j1 - cell.j0) / 2;
    const FamilySample& mid = s.sample(ci, cj);
    const double gap = 2.0 * mid.form.radius();
    const DomainRect r = rect_of(cell);
    const bool splittable = cell.i1 - cell.i0 >= 4 && cell.j1 - cell.j0 >= 4;
    if (r.diameter() < opt.tol || gap < gap_tol || depth >= opt.max_depth || !splittable) {
      out.point = s.point(ci, cj);
      out.double_value = 0.5 * mid.form.trace();
      out.gap = gap;
      out.cell = r;
      break;
    }
    bool done = false;
    std::optional<std::pair<std::int64_t, std::int64_t>> hit;
    for (int retry = 0; retry <= opt.max_retries && !done; ++retry) {
      const double frac = 0.5 + kShifts[std::min<int>(retry, 5)];
      const auto mi = cell.i0 + static_cast<std::int64_t>(std::llround((cell.i1 - cell.i0) * frac));
      const auto mj = cell.j0 + static_cast<std::int64_t>(std::llround((cell.j1 - cell.j0) * frac));
      const std::array<Cell, 4> kids{Cell{cell.i0, mi, cell.j0, mj}, Cell{mi, cell.i1, cell.j0, mj},
                                     Cell{cell.i0, mi, mj, cell.j1}, Cell{mi, cell.i1, mj, cell.j1}};
      std::array<int, 4> w{};
      try {
        for (int q = 0; q < 4; ++q) w[static_cast<std::size_t>(q)] = cell_winding(s, kids[static_cast<std::size_t>(q)], opt.cell_samples, 60);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::GuardViolated && s.tripped) {
          hit = s.tripped;
          break;
        }
        if (e.code() != ErrorCode::RefinementBudgetExceeded) throw;
        continue;
      }
      if (w[0] + w[1] + w[2] + w[3] != winding) continue;  // under-resolved; move the split
      int best = 0;
      for (int q = 1; q < 4; ++q) {
        if (std::abs(w[static_cast<std::size_t>(q)]) > std::abs(w[static_cast<std::size_t>(best)])) best = q;
      }
      out.steps.push_back({winding, w, best, retry});
      cell = kids[static_cast<std::size_t>(best)];
      winding = w[static_cast<std::size_t>(best)];
      done = true;
    }
    if (hit) {
      const FamilySample& near = s.sample(hit->first, hit->second);
      out.point = s.point(hit->first, hit->second);
      out.double_value = 0.5 * near.form.trace();
      out.gap = 2.0 * near.form.radius();
      out.cell = rect_of(cell);
      break;
    }
    if (!done) {
      const DomainRect rr = rect_of(cell);
      throw Error(ErrorCode::BoundaryDegeneracy,
                  "split lines of [" + std::to_string(rr.lambda_lo) + ", " + std::to_string(rr.lambda_hi) + "] x [" +
                      std::to_string(rr.theta_lo) + ", " + std::to_string(rr.theta_hi) + "] kept hitting the guard");
    }
  }
  out.evaluations = s.evaluations();
  if (out.gap >= gap_tol) out.evaluations += polish(f, out, gap_tol);
  return out;
}

TransversalityReport transversality_report(const FamilyEvaluator& f, const DomainRect& d, const ParamPoint& a,
                                           int boundary_winding) {
  TransversalityReport rep;
  rep.winding = boundary_winding;
  rep.weak = boundary_winding != 0;
  const double hl = 0.5 * (d.lambda_hi - d.lambda_lo);
  const double ht = 0.5 * (d.theta_hi - d.theta_lo);
  constexpr double h = 1e-5;
  auto xy = [&](double dl, double dt) { return coordinates(f({a.lambda2 + dl * hl, a.theta + dt * ht})); };
  rep.jacobian.col(0) = (xy(h, 0) - xy(-h, 0)) / (2 * h);
  rep.jacobian.col(1) = (xy(0, h) - xy(0, -h)) / (2 * h);
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(rep.jacobian);
  rep.singular_values = svd.singularValues();
  const Eigen::Vector2d at = xy(0, 0);
  for (int c = 0; c < 4; ++c) {
    const ParamPoint q = d.corner(c);
    const double dist = std::hypot((q.lambda2 - a.lambda2) / hl, (q.theta - a.theta) / ht);
    if (dist > 0) rep.scale = std::max(rep.scale, (coordinates(f(q)) - at).norm() / dist);
  }
  rep.strong = rep.singular_values[1] > 1e-6 * std::max(rep.singular_values[0], rep.scale);
  return rep;
}

TransversalityReport transversality_report(const FamilyEvaluator& f, const DomainRect& d, const ParamPoint& a) {
  int w = 0;
  try {
    w = loop_winding(f, d.boundary());
  } catch (const Error& e) {
    if (e.code() != ErrorCode::GuardViolated) throw;
  }
  return transversality_report(f, d, a, w);
}

}  // namespace hodge

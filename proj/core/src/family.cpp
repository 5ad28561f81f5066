#include "hodge/family.hpp"

#include <cmath>
#include <string>

#include "hodge/error.hpp"
#include "hodge/fixtures.hpp"
#include "hodge/spectral.hpp"

namespace hodge {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Deterministic sign: the entry of largest magnitude (first one on ties) is positive.
Eigen::VectorXd fix_sign(Eigen::VectorXd v) {
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best]) * (1.0 + 1e-9)) best = i;
  }
  if (v.size() && v[best] < 0.0) v = -v;
  return v;
}

}  // namespace

std::vector<double> ring_profile(int m, double theta, double amplitude) {
  if (m < 2 || m % 2 != 0) throw Error(ErrorCode::InvalidArgument, "ring size must be even");
  if (!(std::abs(amplitude) < 1.0)) throw Error(ErrorCode::InvalidArgument, "profile amplitude must lie in (-1, 1)");
  std::vector<double> base(static_cast<std::size_t>(m));
  double total = 0.0;
  for (int k = 0; k < m; ++k) {
    base[static_cast<std::size_t>(k)] = 1.0 + amplitude * std::cos(2.0 * kPi * k / m);
    total += base[static_cast<std::size_t>(k)];
  }
  for (auto& b : base) b /= total;
  const double shift = theta * m / (2.0 * kPi);
  std::vector<double> out(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) {
    double x = std::fmod(k - shift, static_cast<double>(m));
    if (x < 0) x += m;
    const double fl = std::floor(x);
    const double frac = x - fl;
    const int i0 = static_cast<int>(fl) % m;
    const int i1 = (i0 + 1) % m;
    out[static_cast<std::size_t>(k)] =
        (1.0 - frac) * base[static_cast<std::size_t>(i0)] + frac * base[static_cast<std::size_t>(i1)];
  }
  return out;
}

GluedSystem::GluedSystem(WeightedComplex base, const SystemConfig& cfg, std::vector<Simplex> base_sites)
    : cfg_(cfg),
      base_(std::move(base)),
      gadget_(dumbbell(cfg.n, cfg.p, cfg.u)),
      sites_(std::move(base_sites)),
      layout_([&] {
        std::vector<const SimplicialComplex*> parts;
        std::vector<std::vector<SitePair>> sites;
        for (const auto& b : sites_) {
          if (static_cast<int>(b.size()) != cfg.p + 1) {
            throw Error(ErrorCode::SiteDimensionMismatch, "base site must be a " + std::to_string(cfg.p) + "-simplex");
          }
          parts.push_back(&gadget_.body.complex);
          std::vector<SitePair> list;
          for (const auto& s : gadget_.sites) list.push_back({b, s});
          sites.push_back(std::move(list));
        }
        return GluingLayout(base_.complex, parts, sites);
      }()) {
  if (!(cfg.epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "coupling must be positive");
  const CoexactSpectrum s = coexact_spectrum(gadget_.body.complex, gadget_.body.weights, cfg.p, true);
  gadget_mu_ = s.values[0];
  gadget_mode_ = fix_sign(s.cochains.col(0));
}

void GluedSystem::set_base_weights(WeightSystem w) {
  base_.weights = WeightSystem(base_.complex, w.all());
}

double GluedSystem::tuning_scale(double lambda) const {
  if (!(lambda > 0.0)) throw Error(ErrorCode::InvalidArgument, "gadget target must be positive");
  return std::sqrt(gadget_mu_ / lambda);
}

WeightSystem GluedSystem::gadget_weights(double lambda) const {
  return homothety(gadget_.body.weights, tuning_scale(lambda), cfg_.n);
}

WeightSystem GluedSystem::weights(const std::vector<GadgetTuning>& tunings) const {
  if (tunings.size() != gadget_count()) throw Error(ErrorCode::InvalidArgument, "one tuning per gadget is required");
  std::vector<WeightSystem> gw;
  std::vector<const WeightSystem*> ptrs;
  std::vector<std::vector<double>> profiles;
  gw.reserve(tunings.size());
  for (const auto& t : tunings) {
    gw.push_back(gadget_weights(t.lambda));
    profiles.push_back(ring_profile(static_cast<int>(gadget_.ring.size()), t.theta, cfg_.amplitude));
  }
  for (const auto& w : gw) ptrs.push_back(&w);
  return layout_.weights(base_.weights, ptrs, std::vector<double>(tunings.size(), cfg_.epsilon), profiles);
}

WeightedComplex GluedSystem::complex_at(const std::vector<GadgetTuning>& tunings) const {
  return {layout_.complex(), weights(tunings)};
}

Eigen::VectorXd GluedSystem::reference(std::size_t g, const WeightSystem& w) const {
  Eigen::VectorXd v = layout_.embed(g + 1, cfg_.p, gadget_mode_);
  v = v.cwiseProduct(w[cfg_.p].cwiseSqrt());
  return v / v.norm();
}

VertexMap GluedSystem::half_turn(std::size_t g) const { return layout_.lift(g + 1, gadget_.involution); }

QuadraticForm2 effective_form(const Eigen::MatrixXd& window_vectors, const Eigen::Vector2d& mu,
                              const Eigen::MatrixXd& reference, double min_overlap) {
  if (window_vectors.cols() != 2 || reference.cols() != 2 || window_vectors.rows() != reference.rows()) {
    throw Error(ErrorCode::InvalidArgument, "effective form needs two window vectors and two reference vectors");
  }
  const Eigen::Matrix2d m = reference.transpose() * window_vectors;
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.singularValues()[1] < min_overlap) {
    throw Error(ErrorCode::DegenerateOverlap,
                "smallest overlap singular value " + std::to_string(svd.singularValues()[1]));
  }
  const Eigen::Matrix2d polar = svd.matrixU() * svd.matrixV().transpose();
  return QuadraticForm2(polar * mu.asDiagonal() * polar.transpose());
}

QuadraticForm2 effective_form(const CochainComplex& k, const WeightSystem& w, int p, double lo, double hi,
                              const Eigen::MatrixXd& reference_cochains) {
  SpectralWindow win;
  try {
    win = spectral_window(k, w, p, lo, hi);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EndpointTooCloseToSpectrum) throw;
    throw Error(ErrorCode::WindowPollution, e.what());
  }
  if (win.values.size() != 2) {
    throw Error(ErrorCode::WindowPollution, std::to_string(win.values.size()) + " eigenvalues in the window");
  }
  Eigen::MatrixXd ref = w[p].cwiseSqrt().asDiagonal() * reference_cochains;
  return effective_form(win.vectors, Eigen::Vector2d(win.values[0], win.values[1]), ref);
}

GluedFamily::GluedFamily(WeightedComplex base, const FamilyConfig& cfg)
    : first_(0),
      second_(1),
      lambda1_(cfg.lambda1),
      eta_(cfg.eta),
      lo_(cfg.window_lo),
      hi_(cfg.window_hi),
      theta_offset_(cfg.theta_offset) {
  const int p = cfg.system.p;
  if (p > base.complex.top_dim()) throw Error(ErrorCode::DegreeOutOfRange, "base has no " + std::to_string(p) + "-simplices");
  const Simplex s1 = cfg.site1.empty() ? base.complex.simplices(p).front() : cfg.site1;
  const Simplex s2 = cfg.site2.empty() ? s1 : cfg.site2;
  system_ = std::make_shared<GluedSystem>(std::move(base), cfg.system, std::vector<Simplex>{s1, s2});
  base_tunings_ = {{lambda1_, 0.0}, {lambda1_, 0.0}};
  if (!(lo_ < lambda1_ - eta_ && lambda1_ + eta_ < hi_)) {
    throw Error(ErrorCode::InvalidArgument, "lambda1 +- eta must lie inside the window");
  }
}

GluedFamily::GluedFamily(std::shared_ptr<const GluedSystem> system, std::vector<GadgetTuning> tunings,
                         std::size_t first, std::size_t second, double lambda1, double eta, double window_lo,
                         double window_hi, double theta_offset)
    : system_(std::move(system)),
      base_tunings_(std::move(tunings)),
      first_(first),
      second_(second),
      lambda1_(lambda1),
      eta_(eta),
      lo_(window_lo),
      hi_(window_hi),
      theta_offset_(theta_offset) {
  if (first_ >= system_->gadget_count() || second_ >= system_->gadget_count() || first_ == second_) {
    throw Error(ErrorCode::InvalidArgument, "family needs two distinct gadgets of the system");
  }
  if (!(lo_ < lambda1_ - eta_ && lambda1_ + eta_ < hi_)) {
    throw Error(ErrorCode::InvalidArgument, "lambda1 +- eta must lie inside the window");
  }
}

FamilyParams GluedFamily::params(const ParamPoint& a) const {
  return {lambda1_, a.lambda2, a.theta, system_->config().epsilon, eta_, system_->config().p, lo_, hi_};
}

std::vector<GadgetTuning> GluedFamily::tunings(const ParamPoint& a) const {
  std::vector<GadgetTuning> t = base_tunings_;
  t[first_] = {lambda1_, 0.0};
  t[second_] = {a.lambda2, a.theta + theta_offset_};
  return t;
}

WeightSystem GluedFamily::weights(const ParamPoint& a) const { return system_->weights(tunings(a)); }

WeightedComplex GluedFamily::complex_at(const ParamPoint& a) const { return {system_->complex(), weights(a)}; }

WindowEigen GluedFamily::window(const ParamPoint& a) const {
  const WeightSystem w = weights(a);
  SpectralWindow win;
  try {
    win = spectral_window(system_->complex(), w, system_->config().p, lo_, hi_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EndpointTooCloseToSpectrum) throw;
    throw Error(ErrorCode::WindowPollution, e.what());
  }
  return {win.values, win.vectors};
}

FamilySample GluedFamily::evaluate(const ParamPoint& a) const {
  const WeightSystem w = weights(a);
  SpectralWindow win;
  try {
    win = spectral_window(system_->complex(), w, system_->config().p, lo_, hi_);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::EndpointTooCloseToSpectrum) throw;
    throw Error(ErrorCode::WindowPollution, e.what());
  }
  if (win.values.size() != 2) {
    throw Error(ErrorCode::WindowPollution, std::to_string(win.values.size()) + " eigenvalues in the window at lambda2=" +
                                                std::to_string(a.lambda2) + ", theta=" + std::to_string(a.theta));
  }
  Eigen::MatrixXd ref(win.vectors.rows(), 2);
  ref.col(0) = system_->reference(first_, w);
  ref.col(1) = system_->reference(second_, w);
  FamilySample s;
  s.form = effective_form(win.vectors, Eigen::Vector2d(win.values[0], win.values[1]), ref);
  s.lower = win.vectors.col(0);
  return s;
}

FamilyEvaluator GluedFamily::evaluator() const {
  return [self = *this](const ParamPoint& a) { return self.evaluate(a); };
}

WeightedComplex scaled_octahedron(int n, int p, double floor) {
  WeightedComplex o = fixtures::octahedron_boundary();
  const double mu = coexact_spectrum(o.complex, o.weights, p, false).values[0];
  o.weights = homothety(o.weights, std::sqrt(mu / floor), n);
  return o;
}

}  // namespace hodge

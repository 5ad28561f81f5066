#include "hodge/gluing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "hodge/error.hpp"
#include "hodge/subspace.hpp"

namespace hodge {

namespace {

// Local cells of `k` that contain `site` or are contained in it, by degree.
std::vector<std::vector<std::size_t>> incident_cells(const SimplicialComplex& k, const Simplex& sorted_site) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(k.top_dim() + 1));
  for (int j = 0; j <= k.top_dim(); ++j) {
    const auto& list = k.simplices(j);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Simplex& s = list[i];
      const bool contains = std::includes(s.begin(), s.end(), sorted_site.begin(), sorted_site.end());
      const bool inside = std::includes(sorted_site.begin(), sorted_site.end(), s.begin(), s.end());
      if (contains || inside) out[static_cast<std::size_t>(j)].push_back(i);
    }
  }
  return out;
}

double mean_weight(const Eigen::VectorXd& w, const std::vector<std::size_t>& cells) {
  double sum = 0.0;
  for (auto c : cells) sum += w[static_cast<Eigen::Index>(c)];
  return sum / static_cast<double>(cells.size());
}

Simplex sorted(Simplex s) {
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

GluingLayout::GluingLayout(const SimplicialComplex& base, const std::vector<const SimplicialComplex*>& parts,
                           const std::vector<std::vector<SitePair>>& sites) {
  if (sites.size() != parts.size()) throw Error(ErrorCode::InvalidArgument, "one site list per part is required");
  std::vector<const SimplicialComplex*> all{&base};
  all.insert(all.end(), parts.begin(), parts.end());

  int offset = 0;
  int top = 0;
  for (const auto* k : all) {
    Block b;
    b.vertices = k->vertices();
    std::sort(b.vertices.begin(), b.vertices.end());
    b.offset = offset;
    offset += static_cast<int>(b.vertices.size());
    top = std::max(top, k->top_dim());
    blocks_.push_back(std::move(b));
  }

  // connector cells per site; mixing faces of the prism triangulation
  std::vector<std::set<Simplex>> cells;
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, int, Simplex>>> pending;
  site_cells_.resize(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t s = 0; s < sites[i].size(); ++s) {
      const SitePair& sp = sites[i][s];
      if (sp.base.size() != sp.part.size() || sp.base.empty()) {
        throw Error(ErrorCode::SiteDimensionMismatch, "site " + std::to_string(s) + " of part " + std::to_string(i) +
                                                           " pairs a " + std::to_string(int(sp.base.size()) - 1) +
                                                           "-simplex with a " +
                                                           std::to_string(int(sp.part.size()) - 1) + "-simplex");
      }
      SiteCells sc;
      sc.dim = static_cast<int>(sp.base.size()) - 1;
      const Simplex bs = sorted(sp.base);
      const Simplex ps = sorted(sp.part);
      sc.base_site = base.index(bs);
      sc.part_site = parts[i]->index(ps);
      sc.base_side = incident_cells(base, bs);
      sc.part_side = incident_cells(*parts[i], ps);

      std::vector<int> b, t;
      for (int v : sp.base) b.push_back(vertex(0, v));
      for (int v : sp.part) t.push_back(vertex(i + 1, v));
      const int k = sc.dim;
      top = std::max(top, k + 1);
      std::set<Simplex> mixed;
      for (int m = 0; m <= k; ++m) {
        std::vector<int> prism(b.begin(), b.begin() + m + 1);
        prism.insert(prism.end(), t.begin() + m, t.end());
        const std::size_t size = prism.size();
        for (unsigned mask = 1; mask < (1U << size); ++mask) {
          Simplex face;
          bool has_b = false, has_t = false;
          for (std::size_t q = 0; q < size; ++q) {
            if (!(mask & (1U << q))) continue;
            face.push_back(prism[q]);
            (static_cast<int>(q) <= m ? has_b : has_t) = true;
          }
          if (has_b && has_t) mixed.insert(sorted(face));
        }
      }
      for (const auto& f : mixed) {
        const auto j = static_cast<std::size_t>(f.size() - 1);
        if (cells.size() <= j) cells.resize(j + 1);
        cells[j].insert(f);
      }
      pending.emplace_back();
      for (const auto& f : mixed) pending.back().emplace_back(i, s, static_cast<int>(f.size()) - 1, f);
      site_cells_[i].push_back(std::move(sc));
    }
  }

  std::vector<std::vector<Simplex>> lists(static_cast<std::size_t>(top + 1));
  for (std::size_t blk = 0; blk < all.size(); ++blk) {
    for (int j = 0; j <= all[blk]->top_dim(); ++j) {
      for (const auto& s : all[blk]->simplices(j)) {
        Simplex g;
        for (int v : s) g.push_back(vertex(blk, v));
        lists[static_cast<std::size_t>(j)].push_back(std::move(g));
      }
    }
  }
  for (std::size_t j = 0; j < cells.size(); ++j) {
    lists[j].insert(lists[j].end(), cells[j].begin(), cells[j].end());
  }
  glued_ = SimplicialComplex::build(std::move(lists));

  for (std::size_t blk = 0; blk < all.size(); ++blk) {
    auto& maps = blocks_[blk].maps;
    maps.resize(static_cast<std::size_t>(all[blk]->top_dim() + 1));
    for (int j = 0; j <= all[blk]->top_dim(); ++j) {
      for (const auto& s : all[blk]->simplices(j)) {
        Simplex g;
        for (int v : s) g.push_back(vertex(blk, v));
        maps[static_cast<std::size_t>(j)].push_back(glued_.index(g));
      }
    }
  }
  for (const auto& group : pending) {
    for (const auto& [i, s, j, f] : group) contributions_.push_back({i, s, j, glued_.index(f)});
  }
}

int GluingLayout::vertex(std::size_t block, int v) const {
  if (block >= blocks_.size()) throw Error(ErrorCode::InvalidArgument, "no block " + std::to_string(block));
  const auto& vs = blocks_[block].vertices;
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) {
    throw Error(ErrorCode::MissingFace, "vertex " + std::to_string(v) + " not in block " + std::to_string(block));
  }
  return blocks_[block].offset + static_cast<int>(it - vs.begin());
}

const std::vector<std::size_t>& GluingLayout::simplex_map(std::size_t block, int degree) const {
  if (block >= blocks_.size()) throw Error(ErrorCode::InvalidArgument, "no block " + std::to_string(block));
  const auto& maps = blocks_[block].maps;
  if (degree < 0 || degree >= static_cast<int>(maps.size())) {
    throw Error(ErrorCode::DegreeOutOfRange, "degree " + std::to_string(degree));
  }
  return maps[static_cast<std::size_t>(degree)];
}

WeightSystem GluingLayout::weights(const WeightSystem& base, const std::vector<const WeightSystem*>& parts,
                                   const std::vector<double>& eps,
                                   const std::vector<std::vector<double>>& profiles) const {
  if (parts.size() != part_count() || eps.size() != part_count() || profiles.size() != part_count()) {
    throw Error(ErrorCode::InvalidArgument, "weights, couplings and profiles must match the parts");
  }
  std::vector<Eigen::VectorXd> w;
  for (int j = 0; j <= glued_.top_dim(); ++j) w.push_back(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(glued_.dim(j))));
  std::vector<const WeightSystem*> all{&base};
  all.insert(all.end(), parts.begin(), parts.end());
  for (std::size_t blk = 0; blk < all.size(); ++blk) {
    const auto& maps = blocks_[blk].maps;
    if (all[blk]->top_degree() + 1 != static_cast<int>(maps.size())) {
      throw Error(ErrorCode::InvalidWeights, "weights of block " + std::to_string(blk) + " do not match its complex");
    }
    for (std::size_t j = 0; j < maps.size(); ++j) {
      const auto& src = (*all[blk])[static_cast<int>(j)];
      for (std::size_t c = 0; c < maps[j].size(); ++c) {
        w[j][static_cast<Eigen::Index>(maps[j][c])] = src[static_cast<Eigen::Index>(c)];
      }
    }
  }
  for (std::size_t i = 0; i < part_count(); ++i) {
    if (profiles[i].size() != site_cells_[i].size()) {
      throw Error(ErrorCode::InvalidArgument, "profile of part " + std::to_string(i) + " has the wrong length");
    }
  }
  for (const auto& c : contributions_) {
    const SiteCells& sc = site_cells_[c.part][c.site];
    const auto j = static_cast<std::size_t>(c.degree);
    const WeightSystem& bw = base;
    const WeightSystem& pw = *parts[c.part];
    const double a = j < sc.base_side.size() && !sc.base_side[j].empty()
                         ? mean_weight(bw[c.degree], sc.base_side[j])
                         : bw[sc.dim][static_cast<Eigen::Index>(sc.base_site)];
    const double b = j < sc.part_side.size() && !sc.part_side[j].empty()
                         ? mean_weight(pw[c.degree], sc.part_side[j])
                         : pw[sc.dim][static_cast<Eigen::Index>(sc.part_site)];
    w[j][static_cast<Eigen::Index>(c.cell)] += eps[c.part] * profiles[c.part][c.site] * std::sqrt(a * b);
  }
  return WeightSystem(glued_, std::move(w));
}

Eigen::VectorXd GluingLayout::embed(std::size_t block, int degree, const Eigen::VectorXd& cochain) const {
  const auto& map = simplex_map(block, degree);
  if (static_cast<std::size_t>(cochain.size()) != map.size()) {
    throw Error(ErrorCode::InvalidArgument, "cochain length does not match the block");
  }
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(glued_.dim(degree)));
  for (std::size_t c = 0; c < map.size(); ++c) out[static_cast<Eigen::Index>(map[c])] = cochain[static_cast<Eigen::Index>(c)];
  return out;
}

VertexMap GluingLayout::lift(std::size_t block, const VertexMap& f) const {
  VertexMap out;
  for (const auto& [from, to] : f) out[vertex(block, from)] = vertex(block, to);
  return out;
}

Attachment attach(const WeightedComplex& base, const std::vector<GluePart>& parts) {
  std::vector<const SimplicialComplex*> shapes;
  std::vector<std::vector<SitePair>> sites;
  std::vector<const WeightSystem*> weights;
  std::vector<double> eps;
  std::vector<std::vector<double>> profiles;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const auto& spec = parts[i].spec;
    if (!(spec.epsilon >= 0.0) || !std::isfinite(spec.epsilon)) {
      throw Error(ErrorCode::InvalidArgument, "coupling must be nonnegative");
    }
    if (spec.profile.size() != spec.sites.size()) {
      throw Error(ErrorCode::InvalidArgument, "one profile entry per site is required");
    }
    double total = 0.0;
    for (double r : spec.profile) {
      if (!(r >= 0.0)) throw Error(ErrorCode::InvalidArgument, "profile entries must be nonnegative");
      total += r;
    }
    if (!spec.sites.empty() && std::abs(total - 1.0) > 1e-12) {
      throw Error(ErrorCode::InvalidArgument, "profile must sum to 1");
    }
    for (const auto& sp : spec.sites) {
      if (sp.base.size() != sp.part.size()) {
        throw Error(ErrorCode::SiteDimensionMismatch, "site pairs a " + std::to_string(int(sp.base.size()) - 1) +
                                                          "-simplex with a " +
                                                          std::to_string(int(sp.part.size()) - 1) + "-simplex");
      }
    }
    shapes.push_back(&parts[i].body.complex);
    weights.push_back(&parts[i].body.weights);
    eps.push_back(spec.epsilon);
    std::vector<SitePair> active;
    std::vector<double> rho;
    if (spec.epsilon > 0.0) {
      for (std::size_t s = 0; s < spec.sites.size(); ++s) {
        if (spec.profile[s] > 0.0) {
          active.push_back(spec.sites[s]);
          rho.push_back(spec.profile[s]);
        }
      }
    }
    sites.push_back(std::move(active));
    profiles.push_back(std::move(rho));
  }
  GluingLayout layout(base.complex, shapes, sites);
  WeightSystem w = layout.weights(base.weights, weights, eps, profiles);
  WeightedComplex result{layout.complex(), std::move(w)};
  return {std::move(layout), std::move(result)};
}

Eigen::VectorXd union_spectrum(const std::vector<CoexactSpectrum>& parts) {
  Eigen::VectorXd out(0);
  for (const auto& s : parts) {
    if (s.degree != parts.front().degree) throw Error(ErrorCode::DegreeMismatch, "spectra of different degrees");
    out = merge_sorted(out, s.values);
  }
  return out;
}

std::vector<ScanRow> convergence_scan(const WeightedComplex& base, const std::vector<GluePart>& parts,
                                      const ScanOptions& opt) {
  if (opt.eps.empty()) throw Error(ErrorCode::InvalidArgument, "empty coupling list");
  for (std::size_t i = 0; i < opt.eps.size(); ++i) {
    if (!(opt.eps[i] > 0.0) || (i > 0 && !(opt.eps[i] < opt.eps[i - 1]))) {
      throw Error(ErrorCode::InvalidArgument, "couplings must be positive and strictly decreasing");
    }
  }
  if (!(0.0 < opt.window_lo && opt.window_lo < opt.window_hi)) {
    throw Error(ErrorCode::InvalidArgument, "window must satisfy 0 < lo < hi");
  }
  const int p = opt.degree;

  std::vector<const SimplicialComplex*> shapes;
  std::vector<std::vector<SitePair>> sites;
  std::vector<const WeightSystem*> weights;
  std::vector<std::vector<double>> profiles;
  for (const auto& part : parts) {
    shapes.push_back(&part.body.complex);
    weights.push_back(&part.body.weights);
    std::vector<SitePair> active;
    std::vector<double> rho;
    for (std::size_t s = 0; s < part.spec.sites.size(); ++s) {
      if (part.spec.profile.at(s) > 0.0) {
        active.push_back(part.spec.sites[s]);
        rho.push_back(part.spec.profile[s]);
      }
    }
    sites.push_back(std::move(active));
    profiles.push_back(std::move(rho));
  }
  GluingLayout layout(base.complex, shapes, sites);
  const SimplicialComplex& glued = layout.complex();

  // decoupled data: spectra of the pieces and their window cochains, embedded
  std::vector<CoexactSpectrum> pieces;
  std::vector<Eigen::VectorXd> window_cochains;
  int part_betti = 0;
  for (std::size_t blk = 0; blk <= parts.size(); ++blk) {
    const WeightedComplex& wc = blk == 0 ? base : parts[blk - 1].body;
    if (p > wc.complex.top_dim()) continue;
    part_betti += wc.complex.betti(p);
    CoexactSpectrum s = coexact_spectrum(wc.complex, wc.weights, p, true);
    SpectralWindow win = window_of(s, opt.window_lo, opt.window_hi);
    for (Eigen::Index c = 0; c < win.cochains.cols(); ++c) {
      window_cochains.push_back(layout.embed(blk, p, win.cochains.col(c)));
    }
    pieces.push_back(std::move(s));
  }
  // cohomology lost to the connectors turns into eigenvalues that vanish with eps
  const auto extra = static_cast<std::size_t>(std::max(0, part_betti - glued.betti(p)));
  const Eigen::VectorXd limit = merge_sorted(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(extra)), union_spectrum(pieces));
  Eigen::MatrixXd decoupled(static_cast<Eigen::Index>(glued.dim(p)), static_cast<Eigen::Index>(window_cochains.size()));
  for (std::size_t c = 0; c < window_cochains.size(); ++c) decoupled.col(static_cast<Eigen::Index>(c)) = window_cochains[c];

  std::vector<ScanRow> rows;
  for (double eps : opt.eps) {
    const WeightSystem w = layout.weights(base.weights, weights, std::vector<double>(parts.size(), eps), profiles);
    const CoexactSpectrum s = coexact_spectrum(glued, w, p, true);
    SpectralWindow win;
    try {
      win = window_of(s, opt.window_lo, opt.window_hi);
    } catch (const Error& e) {
      throw Error(ErrorCode::WindowTouchesSpectrum, std::string("eps ") + std::to_string(eps) + ": " + e.what());
    }
    if (win.values.size() != decoupled.cols()) {
      throw Error(ErrorCode::WindowTouchesSpectrum, "eps " + std::to_string(eps) + ": window holds " +
                                                        std::to_string(win.values.size()) + " eigenvalues instead of " +
                                                        std::to_string(decoupled.cols()));
    }
    const double dist = subspace_distance(w, p, win.cochains, decoupled).distance;
    const auto count = std::min<std::size_t>({opt.count, s.size(), static_cast<std::size_t>(limit.size())});
    for (std::size_t i = 0; i < count; ++i) {
      const auto ii = static_cast<Eigen::Index>(i);
      rows.push_back({eps, i + 1, s.values[ii], std::abs(s.values[ii] - limit[ii]), dist});
    }
  }
  return rows;
}

}  // namespace hodge

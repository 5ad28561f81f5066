#include "commands.hpp"

#include <cmath>
#include <memory>
#include <sstream>

#include "hodge/dumbbell.hpp"
#include "hodge/error.hpp"
#include "hodge/family.hpp"
#include "hodge/gluing.hpp"
#include "hodge/io.hpp"
#include "hodge/parallel.hpp"
#include "hodge/prescribe.hpp"
#include "hodge/product.hpp"
#include "hodge/spectral.hpp"

namespace hodge::cli {

namespace {

using nlohmann::json;

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_row(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_double(v[i]);
  return s + "\n";
}

template <typename T>
T field(const json& j, const char* key, T fallback) {
  try {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string(key) + ": " + e.what());
  }
}

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

// Family files: {"base": complex?, "base_floor": 40, "n": 3, "p": 1, "u": 1e-3,
// "epsilon": 0.2, "amplitude": 0.9, "lambda1": 1, "eta": 0.2, "window": [lo, hi],
// "theta_offset": 0, "domain": {"lambda": [lo, hi], "theta": [lo, hi]}}
struct FamilyInput {
  std::unique_ptr<GluedFamily> family;
  DomainRect domain;
};

FamilyInput read_family(const std::string& path) {
  const json j = read_json_file(path);
  FamilyConfig cfg;
  cfg.system.n = field(j, "n", 3);
  cfg.system.p = field(j, "p", 1);
  cfg.system.u = field(j, "u", 1e-3);
  cfg.system.epsilon = field(j, "epsilon", 0.2);
  cfg.system.amplitude = field(j, "amplitude", 0.9);
  cfg.lambda1 = field(j, "lambda1", 1.0);
  cfg.eta = field(j, "eta", 0.2);
  const auto window = field(j, "window", std::vector<double>{cfg.lambda1 / 2, 1.5 * cfg.lambda1});
  if (window.size() != 2) throw Error(ErrorCode::ParseError, "window needs two numbers");
  cfg.window_lo = window[0];
  cfg.window_hi = window[1];
  cfg.theta_offset = field(j, "theta_offset", 0.0);
  WeightedComplex base = j.contains("base") ? complex_from_json(j.at("base"))
                                            : scaled_octahedron(cfg.system.n, cfg.system.p, field(j, "base_floor", 40.0));
  FamilyInput out;
  out.family = std::make_unique<GluedFamily>(std::move(base), cfg);
  out.domain = out.family->domain();
  if (j.contains("domain")) {
    const auto l = field(j.at("domain"), "lambda", std::vector<double>{out.domain.lambda_lo, out.domain.lambda_hi});
    const auto t = field(j.at("domain"), "theta", std::vector<double>{out.domain.theta_lo, out.domain.theta_hi});
    if (l.size() != 2 || t.size() != 2 || !(l[0] < l[1]) || !(t[0] < t[1])) {
      throw Error(ErrorCode::InvalidArgument, "domain needs increasing [lo, hi] pairs");
    }
    out.domain = {l[0], l[1], t[0], t[1]};
  }
  return out;
}

// Glue files: {"base": complex, "parts": [part, ...]} where a part is either
// {"body": complex, "sites": [[[base...], [part...]], ...], "profile": [...]}
// or {"dumbbell": {"n": 3, "p": 0, "u": 0.1}, "base_site": [...], "profile": [...]}.
std::pair<WeightedComplex, std::vector<GluePart>> read_glue(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.contains("base") || !j.contains("parts")) throw Error(ErrorCode::ParseError, "need base and parts");
  WeightedComplex base = complex_from_json(j.at("base"));
  std::vector<GluePart> parts;
  for (const auto& pj : j.at("parts")) {
    GluePart part;
    if (pj.contains("dumbbell")) {
      const auto& d = pj.at("dumbbell");
      const DumbbellGadget g = dumbbell(field(d, "n", 3), field(d, "p", 0), field(d, "u", 0.1));
      part.body = g.body;
      const auto site = field(pj, "base_site", Simplex{});
      for (const auto& s : g.sites) part.spec.sites.push_back({site, s});
    } else {
      part.body = complex_from_json(pj.at("body"));
      for (const auto& s : pj.at("sites")) {
        part.spec.sites.push_back({s.at(0).get<Simplex>(), s.at(1).get<Simplex>()});
      }
    }
    const std::size_t m = part.spec.sites.size();
    part.spec.profile = field(pj, "profile", std::vector<double>(m, 1.0 / static_cast<double>(m)));
    part.spec.epsilon = 1.0;
    parts.push_back(std::move(part));
  }
  return {std::move(base), std::move(parts)};
}

json degeneracy_json(const Degeneracy& d) {
  return {{"lambda2", d.point.lambda2},
          {"theta", d.point.theta},
          {"double_value", d.double_value},
          {"gap", d.gap},
          {"relative_gap", d.gap / std::max(std::abs(d.double_value), 1e-300)},
          {"winding", d.winding},
          {"evaluations", d.evaluations},
          {"quadrisection_steps", d.steps.size()},
          {"cell", {{"lambda", {d.cell.lambda_lo, d.cell.lambda_hi}}, {"theta", {d.cell.theta_lo, d.cell.theta_hi}}}}};
}

}  // namespace

std::string error_body(const std::string& name, const std::string& message) {
  return json{{"error", name}, {"message", message}}.dump() + "\n";
}

Output spectrum(const std::string& in, int p, const std::string& kind) {
  const WeightedComplex wc = complex_from_json(read_json_file(in));
  const Eigen::VectorXd v = kind == "coexact" ? coexact_spectrum(wc.complex, wc.weights, p, false).values
                                              : full_spectrum(wc.complex, wc.weights, p);
  Output out;
  out.text = "index,eigenvalue\n";
  for (Eigen::Index i = 0; i < v.size(); ++i) out.text += std::to_string(i + 1) + "," + format_double(v[i]) + "\n";
  return out;
}

Output consistency(const std::string& in) {
  const WeightedComplex wc = complex_from_json(read_json_file(in));
  json reports = json::array();
  bool ok = true;
  for (int p = 0; p <= wc.complex.top_dim(); ++p) {
    const ConsistencyReport r = consistency_report(wc.complex, wc.weights, p);
    ok = ok && r.passed;
    reports.push_back({{"degree", r.degree},
                       {"max_deviation", r.max_deviation},
                       {"tolerance", r.tolerance},
                       {"kernel_dim", r.kernel_dim},
                       {"betti", r.betti},
                       {"offending", r.offending},
                       {"passed", r.passed}});
  }
  Output out;
  out.text = dump({{"passed", ok}, {"degrees", reports}});
  out.status = ok ? 0 : 2;
  return out;
}

Output glue_scan(const std::string& in, int p, const std::vector<double>& eps, std::size_t count, double lo,
                 double hi) {
  auto [base, parts] = read_glue(in);
  ScanOptions opt;
  opt.degree = p;
  opt.eps = eps;
  opt.count = count;
  opt.window_lo = lo;
  opt.window_hi = hi;
  Output out;
  out.text = "eps,index,mu,deviation,subspace_distance\n";
  for (const ScanRow& r : convergence_scan(base, parts, opt)) {
    out.text += format_double(r.eps) + "," + std::to_string(r.index) + "," + format_double(r.mu) + "," +
                format_double(r.deviation) + "," + format_double(r.subspace_distance) + "\n";
  }
  return out;
}

Output dumbbell_scan(int n, int p, const std::vector<double>& us) {
  Output out;
  out.text = "u,mu1,mu2,ratio_to_previous,other_degree_floor,floor_c,oddness\n";
  std::vector<std::vector<double>> rows(us.size());
  parallel_for(us.size(), [&](std::size_t i) {
    const DumbbellGadget g = dumbbell(n, p, us[i]);
    const CoexactSpectrum s = coexact_spectrum(g.body.complex, g.body.weights, p, true);
    double other = INFINITY;
    for (int q = 0; q < g.body.complex.top_dim(); ++q) {
      if (q == p) continue;
      const auto t = coexact_spectrum(g.body.complex, g.body.weights, q, false);
      if (t.size()) other = std::min(other, t.values[0]);
    }
    rows[i] = {us[i], s.values[0], s.values[1], NAN, other, g.floor_c,
               static_cast<double>(check_odd_symmetry(g, s, 0))};
  });
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0) rows[i][3] = rows[i][1] / rows[i - 1][1];
    out.text += csv_row(rows[i]);
  }
  return out;
}

Output diabolo_grid(const std::string& in, int lambda_steps, int theta_steps) {
  if (lambda_steps < 2 || theta_steps < 2) throw Error(ErrorCode::InvalidArgument, "grid needs at least 2x2 points");
  const FamilyInput f = read_family(in);
  const DomainRect& d = f.domain;
  const auto cells = static_cast<std::size_t>(lambda_steps) * static_cast<std::size_t>(theta_steps);
  std::vector<std::vector<double>> rows(cells);
  parallel_for(cells, [&](std::size_t c) {
    const auto i = static_cast<int>(c / static_cast<std::size_t>(theta_steps));
    const auto k = static_cast<int>(c % static_cast<std::size_t>(theta_steps));
    const ParamPoint a{d.lambda_lo + (d.lambda_hi - d.lambda_lo) * i / (lambda_steps - 1),
                       d.theta_lo + (d.theta_hi - d.theta_lo) * k / (theta_steps - 1)};
    const WindowEigen w = f.family->window(a);
    const FamilySample s = f.family->evaluate(a);
    rows[c] = {a.lambda2, a.theta, w.values[0], w.values[1], w.values[1] - w.values[0], s.form.x(), s.form.y()};
  });
  Output out;
  out.text = "lambda2,theta,mu1,mu2,gap,x,y\n";
  for (const auto& r : rows) out.text += csv_row(r);
  return out;
}

Output diabolo_find(const std::string& in, double tol) {
  const FamilyInput f = read_family(in);
  DegeneracyOptions opt;
  opt.tol = tol;
  const FamilyEvaluator ev = f.family->evaluator();
  const Degeneracy d = find_degeneracy(ev, f.domain, opt);
  const int holonomy = eigenline_holonomy(ev, f.domain.boundary());
  const TransversalityReport t = transversality_report(ev, f.domain, d.point, d.winding);
  json j = degeneracy_json(d);
  j["holonomy"] = holonomy;
  j["domain"] = {{"lambda", {f.domain.lambda_lo, f.domain.lambda_hi}}, {"theta", {f.domain.theta_lo, f.domain.theta_hi}}};
  j["transversality"] = {{"weak", t.weak},
                         {"strong", t.strong},
                         {"singular_values", {t.singular_values[0], t.singular_values[1]}},
                         {"scale", t.scale}};
  Output out;
  out.text = dump(j);
  return out;
}

Output prescribe(const std::string& in, const std::string& base_path) {
  const TargetSpectrum t = target_spectrum_from_json(read_json_file(in));
  validate(t);
  const WeightedComplex base = base_path.empty() ? scaled_octahedron(3, 1, 40.0)
                                                 : complex_from_json(read_json_file(base_path));
  const PrescribeResult r = prescribe_spectrum(base, t);
  Output out;
  out.text = dump(complex_to_json(r.metric));
  out.side = dump(prescription_report(r, t));
  out.status = r.checks.passed() ? 0 : 2;
  return out;
}

Output kunneth(int p, int k, const std::string& in1, const std::string& in2) {
  json j;
  bool ok = true;
  if (in1.empty() != in2.empty()) throw Error(ErrorCode::InvalidArgument, "give both factors or neither");
  if (in1.empty()) {
    const auto [prod, r] = high_multiplicity_example(p, k);
    ok = r.verified;
    j = {{"p", r.p},
         {"k", r.k},
         {"n1_mu0", r.n1_mu0},
         {"n1_mu0_multiplicity", r.n1_mu0_multiplicity},
         {"n1_mu1", number(r.n1_mu1)},
         {"side_condition", r.side_condition},
         {"n2_betti", r.n2_betti},
         {"n2_floor", number(r.n2_floor)},
         {"gap_condition", r.gap_condition},
         {"mu1", number(r.mu1)},
         {"multiplicity", r.multiplicity},
         {"first_value_matches", r.first_value_matches},
         {"verified", r.verified},
         {"relaxation", r.relaxation},
         {"product_dims", [&] {
            std::vector<std::size_t> dims;
            for (int s = 0; s <= prod.top_degree(); ++s) dims.push_back(prod.dim(s));
            return dims;
          }()}};
  } else {
    const WeightedComplex a = complex_from_json(read_json_file(in1));
    const WeightedComplex b = complex_from_json(read_json_file(in2));
    std::vector<Eigen::VectorXd> fa, fb;
    for (int s = 0; s <= a.complex.top_dim(); ++s) fa.push_back(full_spectrum(a.complex, a.weights, s));
    for (int s = 0; s <= b.complex.top_dim(); ++s) fb.push_back(full_spectrum(b.complex, b.weights, s));
    const KunnethSpectrum ks = kunneth_spectrum(fa, a.complex.betti_numbers(), fb, b.complex.betti_numbers(), p);
    const Eigen::VectorXd& c = ks.coexact[static_cast<std::size_t>(p)];
    const ProductComplex prod(a.complex, a.weights, b.complex, b.weights);
    const Eigen::VectorXd direct = p <= prod.top_degree()
                                       ? coexact_spectrum(prod, prod.weights(), p, false).values
                                       : Eigen::VectorXd();
    double dev = c.size() == direct.size() ? 0.0 : INFINITY;
    if (c.size() == direct.size() && c.size() > 0) dev = (c - direct).cwiseAbs().maxCoeff();
    ok = dev <= 1e-10 * std::max(1.0, c.size() ? c.maxCoeff() : 1.0);
    j = {{"p", p},
         {"betti", ks.betti[static_cast<std::size_t>(p)]},
         {"coexact", std::vector<double>(c.data(), c.data() + c.size())},
         {"first", c.size() ? json(c[0]) : json(nullptr)},
         {"multiplicity", leading_multiplicity(c)},
         {"direct_max_deviation", number(dev)},
         {"verified", ok}};
  }
  Output out;
  out.text = dump(j);
  out.status = ok ? 0 : 2;
  return out;
}

}  // namespace hodge::cli

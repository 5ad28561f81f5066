#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hodge/error.hpp"
#include "hodge/io.hpp"

namespace {

int emit(const hodge::cli::Output& out, const std::string& path, const std::string& side_path) {
  if (path.empty()) {
    std::cout << out.text;
  } else {
    hodge::write_text_file(path, out.text);
  }
  if (!out.side.empty()) {
    if (side_path.empty()) {
      std::cout << out.side;
    } else {
      hodge::write_text_file(side_path, out.side);
    }
  }
  return out.status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral experiments on weighted simplicial complexes"};
  app.require_subcommand(1);
  std::string in, out, report, base, in1, in2, kind = "full";
  int p = 0, n = 3, k = 3, lambda_steps = 41, theta_steps = 41;
  std::size_t count = 5;
  double tol = 1e-4;
  std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5}, us{1e-1, 1e-2, 1e-3, 1e-4}, window;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the degree-p Laplacian as CSV");
  spectrum->add_option("--in", in, "complex JSON")->required()->check(CLI::ExistingFile);
  spectrum->add_option("--p", p, "degree")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--kind", kind, "full or coexact")->check(CLI::IsMember({"full", "coexact"}));

  auto* consistency = app.add_subcommand("consistency", "Check spec L_p = coex_{p-1} + coex_p and kernels");
  consistency->add_option("--in", in, "complex JSON")->required()->check(CLI::ExistingFile);

  auto* glue = app.add_subcommand("glue-scan", "Glued spectrum against the decoupled limit for decreasing eps");
  glue->add_option("--in", in, "glue JSON")->required()->check(CLI::ExistingFile);
  glue->add_option("--p", p, "degree")->check(CLI::NonNegativeNumber);
  glue->add_option("--eps", eps, "strictly decreasing eps values")->delimiter(',');
  glue->add_option("--count", count, "eigenvalues compared");
  glue->add_option("--window", window, "lo,hi of the tracked window")->delimiter(',')->expected(2)->required();

  auto* dscan = app.add_subcommand("dumbbell-scan", "Small eigenvalue and floors of the dumbbell gadget");
  dscan->add_option("--n", n, "dimension");
  dscan->add_option("--p", p, "degree")->check(CLI::NonNegativeNumber);
  dscan->add_option("--u", us, "neck weights")->delimiter(',');

  auto* grid = app.add_subcommand("diabolo-grid", "Window eigenvalues over the (lambda2, theta) domain");
  grid->add_option("--in", in, "family JSON")->required()->check(CLI::ExistingFile);
  grid->add_option("--lambda-steps", lambda_steps)->check(CLI::Range(2, 10000));
  grid->add_option("--theta-steps", theta_steps)->check(CLI::Range(2, 10000));

  auto* find = app.add_subcommand("diabolo-find", "Certified double eigenvalue of a two-parameter family");
  find->add_option("--in", in, "family JSON")->required()->check(CLI::ExistingFile);
  find->add_option("--tol", tol, "cell diameter at which the search stops")->check(CLI::PositiveNumber);

  auto* presc = app.add_subcommand("prescribe", "Metric with a prescribed low coexact 1-spectrum and volume");
  presc->add_option("--in", in, "targets JSON")->required()->check(CLI::ExistingFile);
  presc->add_option("--base", base, "base complex JSON (default: octahedron)")->check(CLI::ExistingFile);
  presc->add_option("--report", report, "verification report path (default: stdout)");

  auto* kun = app.add_subcommand("kunneth", "Product spectra and the multiplicity example");
  kun->add_option("--p", p, "degree")->check(CLI::NonNegativeNumber);
  kun->add_option("--k", k, "requested multiplicity")->check(CLI::Range(1, 20));
  kun->add_option("--in1", in1, "first factor JSON")->check(CLI::ExistingFile);
  kun->add_option("--in2", in2, "second factor JSON")->check(CLI::ExistingFile);

  for (auto* sub : {spectrum, consistency, glue, dscan, grid, find, presc, kun}) {
    sub->add_option("--out", out, "output path (default: stdout)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << hodge::cli::error_body("InvalidArgument", e.what());
    return 1;
  }

  try {
    namespace c = hodge::cli;
    if (*spectrum) return emit(c::spectrum(in, p, kind), out, "");
    if (*consistency) return emit(c::consistency(in), out, "");
    if (*glue) return emit(c::glue_scan(in, p, eps, count, window[0], window[1]), out, "");
    if (*dscan) return emit(c::dumbbell_scan(n, p, us), out, "");
    if (*grid) return emit(c::diabolo_grid(in, lambda_steps, theta_steps), out, "");
    if (*find) return emit(c::diabolo_find(in, tol), out, "");
    if (*presc) return emit(c::prescribe(in, base), out, report);
    if (*kun) return emit(c::kunneth(p, k, in1, in2), out, "");
  } catch (const hodge::Error& e) {
    std::cout << hodge::cli::error_body(std::string(hodge::to_string(e.code())), e.what());
    return hodge::is_certificate_failure(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << hodge::cli::error_body("InternalError", e.what());
    return 1;
  }
  return 1;
}

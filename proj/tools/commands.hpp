#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hodge::cli {

struct Output {
  std::string text;  // main output (stdout or --out)
  std::string side;  // secondary file contents (e.g. the prescription report)
  int status = 0;
};

Output spectrum(const std::string& in, int p, const std::string& kind);
Output consistency(const std::string& in);
Output glue_scan(const std::string& in, int p, const std::vector<double>& eps, std::size_t count, double lo,
                 double hi);
Output dumbbell_scan(int n, int p, const std::vector<double>& u);
Output diabolo_grid(const std::string& in, int lambda_steps, int theta_steps);
Output diabolo_find(const std::string& in, double tol);
Output prescribe(const std::string& in, const std::string& base);
Output kunneth(int p, int k, const std::string& in1, const std::string& in2);

/// {"error": <name>, "message": <text>}
std::string error_body(const std::string& name, const std::string& message);

}  // namespace hodge::cli

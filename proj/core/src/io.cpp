#include "hodge/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hodge/error.hpp"

namespace hodge {

WeightedComplex complex_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("simplices")) throw Error(ErrorCode::ParseError, "missing \"simplices\"");
    const int n = j.contains("top_dim") ? j.at("top_dim").get<int>() : -1;
    const auto& s = j.at("simplices");
    int top = n;
    if (top < 0) {
      for (auto it = s.begin(); it != s.end(); ++it) top = std::max(top, std::stoi(it.key()));
    }
    std::vector<std::vector<Simplex>> lists(static_cast<std::size_t>(top + 1));
    for (int d = 0; d <= top; ++d) {
      const std::string key = std::to_string(d);
      if (!s.contains(key)) continue;
      for (const auto& t : s.at(key)) lists[static_cast<std::size_t>(d)].push_back(t.get<Simplex>());
    }
    SimplicialComplex k = SimplicialComplex::build(std::move(lists));
    if (k.top_dim() != top) throw Error(ErrorCode::ParseError, "top_dim does not match the simplex lists");
    if (!j.contains("weights")) return with_unit_weights(std::move(k));
    std::vector<Eigen::VectorXd> w;
    for (int d = 0; d <= top; ++d) {
      const std::string key = std::to_string(d);
      if (!j.at("weights").contains(key)) throw Error(ErrorCode::ParseError, "missing weights for degree " + key);
      const auto v = j.at("weights").at(key).get<std::vector<double>>();
      w.push_back(Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size())));
    }
    WeightSystem ws(k, std::move(w));
    return {std::move(k), std::move(ws)};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, std::string("bad degree key: ") + e.what());
  }
}

nlohmann::json complex_to_json(const WeightedComplex& wc) {
  nlohmann::json j;
  j["top_dim"] = wc.complex.top_dim();
  for (int d = 0; d <= wc.complex.top_dim(); ++d) {
    const std::string key = std::to_string(d);
    j["simplices"][key] = wc.complex.simplices(d);
    const auto& w = wc.weights[d];
    j["weights"][key] = std::vector<double>(w.data(), w.data() + w.size());
  }
  return j;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  out << text;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace hodge

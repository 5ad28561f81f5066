#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hodge/weights.hpp"

namespace hodge {

/// {"top_dim": n, "simplices": {"0": [[v], ...], ...}, "weights": {"0": [...], ...}}.
/// Missing "weights" means unit weights. Throws ParseError.
WeightedComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const WeightedComplex& wc);

nlohmann::json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

/// 17 significant digits, '.' decimal point.
std::string format_double(double v);

}  // namespace hodge

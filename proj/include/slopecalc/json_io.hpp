#pragma once

#include <string>

#include <json.hpp>

#include "slopecalc/filtered.hpp"
#include "slopecalc/semilinear.hpp"

namespace slopecalc {

// {"dim": n, "slopes": [{"num":, "den":, "mult":}, ...]}, ascending,
// gcd-reduced, den > 0. The interchange schema of every CLI command.
nlohmann::json to_json(const SlopeMultiset& a);
SlopeMultiset multiset_from_json(const nlohmann::json& j);

// Multiset schema extended with "level".
nlohmann::json to_json(const SlopeData& a);
SlopeData slope_data_from_json(const nlohmann::json& j);

// {"p":, "r":, "N":, "entries": [[{"coeffs": [...], "pshift":}, ...], ...]}
// row-major square matrix; optional precision override replaces N.
PhiMatrix phi_matrix_from_json(const nlohmann::json& j, long precision_override = 0);

// Monospace polyline of the polygon from (0,0) through its vertices.
std::string render_ascii(const SlopeMultiset& a);
// Standalone SVG document, one polyline, 100 units per lattice step,
// byte-deterministic for identical inputs.
std::string render_svg(const SlopeMultiset& a);

} // namespace slopecalc

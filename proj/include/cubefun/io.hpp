#pragma once

#include <string>

#include "cubefun/bounds.hpp"
#include "cubefun/cube_function.hpp"
#include "cubefun/level_profile.hpp"

#include <json.hpp>

namespace cubefun {

// Function schema: {"n", "format": "truth_table" | "fourier", "values": [...],
// "convention": "bit0_plus_one"}. Fourier values are ["binary mask", coeff]
// pairs, mask written most-significant-variable first.
CubeFunction function_from_json(const nlohmann::json& j);
nlohmann::json function_to_json(const CubeFunction& f, bool fourier_format = false);

LevelProfile profile_from_json(const nlohmann::json& j);
nlohmann::json profile_to_json(const LevelProfile& lp);

nlohmann::json report_to_json(const BoundReport& rep);

// Reads either a function or a level profile file; profiles are synthesized
// to a dense table (n <= 24 applies).
CubeFunction load_function(const std::string& path);

nlohmann::json parse_file(const std::string& path);

}  // namespace cubefun

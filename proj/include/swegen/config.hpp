#pragma once

#include "swegen/grid.hpp"
#include "swegen/render.hpp"
#include "swegen/scenario.hpp"

#include "json.hpp"

namespace swegen {

using Json = nlohmann::ordered_json;

// Scenario config schema:
//   { "seed": 7, "family": "random_terrain",
//     "grid":   { "nx": 128, "ny": 128, "dx": 0.0078125, "dy": 0.0078125 },
//     "config": { "gravity": 9.81, "cfl": 0.45, "t_final": 1.5, "n_frames": 21,
//                 "h_dry": 1e-6, "flux_scheme": "roe" },
//     "family_params": { ... fields of the family's parameter struct ... } }
//
// Every key is optional on input; missing keys keep the value already in the
// base object (defaults, or values from a lower-priority source). Unknown keys
// are rejected so typos surface as config errors.

Json to_json(const GridSpec& grid);
Json to_json(const SimConfig& config);
Json to_json(const FamilyParams& params);
Json to_json(const ScenarioSpec& spec);

GridSpec grid_from_json(const Json& j);
SimConfig config_from_json(const Json& j, SimConfig base = {});
FamilyParams params_from_json(Family family, const Json& j, FamilyParams base);
ScenarioSpec spec_from_json(const Json& j, ScenarioSpec base = {});

/// Style file for the renderer: any subset of the ShadeParams fields, colours
/// and the light as 3-element arrays.
Json to_json(const ShadeParams& style);
ShadeParams style_from_json(const Json& j, ShadeParams base = {});

/// Parse a file; throws std::invalid_argument with the path on bad JSON.
Json load_json_file(const std::string& path);

std::string checksum_hex(std::uint64_t checksum);
std::uint64_t parse_checksum_hex(const std::string& text);

}  // namespace swegen

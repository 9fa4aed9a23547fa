#include "swegen/config.hpp"

#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string_view>

namespace swegen {

namespace {

void reject_unknown(const Json& j, std::string_view where, std::initializer_list<std::string_view> keys) {
    if (!j.is_object())
        throw std::invalid_argument(std::string(where) + ": expected a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (std::string_view k : keys)
            known = known || item.key() == k;
        if (!known)
            throw std::invalid_argument(std::string(where) + ": unknown key '" + item.key() + "'");
    }
}

template <class T>
void read(const Json& j, const char* key, T& out) {
    if (!j.contains(key))
        return;
    try {
        out = j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw std::invalid_argument(std::string("config key '") + key + "' has the wrong type");
    }
}

Json to_json_params(const RandomTerrainParams& p) {
    return {{"hills_min", p.hills_min},
            {"hills_max", p.hills_max},
            {"hill_amplitude_min", p.hill_amplitude_min},
            {"hill_amplitude_max", p.hill_amplitude_max},
            {"hill_width_min", p.hill_width_min},
            {"hill_width_max", p.hill_width_max},
            {"mounds_min", p.mounds_min},
            {"mounds_max", p.mounds_max},
            {"mound_total_max", p.mound_total_max},
            {"mound_width_min", p.mound_width_min},
            {"mound_width_max", p.mound_width_max},
            {"surface_level", p.surface_level}};
}

Json to_json_params(const PlanarRiverbedParams& p) {
    return {{"slope_min", p.slope_min},
            {"slope_max", p.slope_max},
            {"offset_min", p.offset_min},
            {"offset_max", p.offset_max},
            {"mound_amplitude_min", p.mound_amplitude_min},
            {"mound_amplitude_max", p.mound_amplitude_max},
            {"mound_width_min", p.mound_width_min},
            {"mound_width_max", p.mound_width_max},
            {"surface_level", p.surface_level}};
}

Json to_json_params(const GaussianBumpParams& p) {
    return {{"center_x", p.center_x},
            {"center_y", p.center_y},
            {"amplitude", p.amplitude},
            {"sigma", p.sigma}};
}

Json to_json_params(const DamBreakParams& p) {
    return {{"h_left", p.h_left},
            {"h_right", p.h_right},
            {"orientation", p.orientation == DamOrientation::x ? "x" : "y"}};
}

RandomTerrainParams from_json_params(const Json& j, RandomTerrainParams p) {
    reject_unknown(j, "family_params",
                   {"hills_min", "hills_max", "hill_amplitude_min", "hill_amplitude_max",
                    "hill_width_min", "hill_width_max", "mounds_min", "mounds_max",
                    "mound_total_max", "mound_width_min", "mound_width_max", "surface_level"});
    read(j, "hills_min", p.hills_min);
    read(j, "hills_max", p.hills_max);
    read(j, "hill_amplitude_min", p.hill_amplitude_min);
    read(j, "hill_amplitude_max", p.hill_amplitude_max);
    read(j, "hill_width_min", p.hill_width_min);
    read(j, "hill_width_max", p.hill_width_max);
    read(j, "mounds_min", p.mounds_min);
    read(j, "mounds_max", p.mounds_max);
    read(j, "mound_total_max", p.mound_total_max);
    read(j, "mound_width_min", p.mound_width_min);
    read(j, "mound_width_max", p.mound_width_max);
    read(j, "surface_level", p.surface_level);
    return p;
}

PlanarRiverbedParams from_json_params(const Json& j, PlanarRiverbedParams p) {
    reject_unknown(j, "family_params",
                   {"slope_min", "slope_max", "offset_min", "offset_max", "mound_amplitude_min",
                    "mound_amplitude_max", "mound_width_min", "mound_width_max", "surface_level"});
    read(j, "slope_min", p.slope_min);
    read(j, "slope_max", p.slope_max);
    read(j, "offset_min", p.offset_min);
    read(j, "offset_max", p.offset_max);
    read(j, "mound_amplitude_min", p.mound_amplitude_min);
    read(j, "mound_amplitude_max", p.mound_amplitude_max);
    read(j, "mound_width_min", p.mound_width_min);
    read(j, "mound_width_max", p.mound_width_max);
    read(j, "surface_level", p.surface_level);
    return p;
}

GaussianBumpParams from_json_params(const Json& j, GaussianBumpParams p) {
    reject_unknown(j, "family_params", {"center_x", "center_y", "amplitude", "sigma"});
    read(j, "center_x", p.center_x);
    read(j, "center_y", p.center_y);
    read(j, "amplitude", p.amplitude);
    read(j, "sigma", p.sigma);
    return p;
}

DamBreakParams from_json_params(const Json& j, DamBreakParams p) {
    reject_unknown(j, "family_params", {"h_left", "h_right", "orientation"});
    read(j, "h_left", p.h_left);
    read(j, "h_right", p.h_right);
    if (j.contains("orientation")) {
        std::string o;
        read(j, "orientation", o);
        if (o == "x")
            p.orientation = DamOrientation::x;
        else if (o == "y")
            p.orientation = DamOrientation::y;
        else
            throw std::invalid_argument("dam orientation must be \"x\" or \"y\"");
    }
    return p;
}

}  // namespace

Json to_json(const GridSpec& grid) {
    return {{"nx", grid.nx()}, {"ny", grid.ny()}, {"dx", grid.dx()}, {"dy", grid.dy()}};
}

Json to_json(const SimConfig& c) {
    return {{"gravity", c.gravity},   {"cfl", c.cfl},     {"t_final", c.t_final},
            {"n_frames", c.n_frames}, {"h_dry", c.h_dry}, {"flux_scheme", to_string(c.flux_scheme)}};
}

Json to_json(const FamilyParams& params) {
    return std::visit([](const auto& p) { return to_json_params(p); }, params);
}

Json to_json(const ScenarioSpec& spec) {
    return {{"seed", spec.seed},
            {"family", to_string(spec.family())},
            {"grid", to_json(spec.grid)},
            {"config", to_json(spec.config)},
            {"family_params", to_json(spec.params)}};
}

GridSpec grid_from_json(const Json& j) {
    reject_unknown(j, "grid", {"nx", "ny", "dx", "dy"});
    long long nx = 0, ny = -1;
    read(j, "nx", nx);
    ny = nx;
    read(j, "ny", ny);
    if (nx < static_cast<long long>(GridSpec::kMinCells) || ny < static_cast<long long>(GridSpec::kMinCells))
        throw std::invalid_argument("grid too small: nx and ny must be >= 4");
    double dx = 1.0 / static_cast<double>(nx);
    double dy = 1.0 / static_cast<double>(ny);
    read(j, "dx", dx);
    read(j, "dy", dy);
    return GridSpec(static_cast<std::size_t>(nx), static_cast<std::size_t>(ny), dx, dy);
}

SimConfig config_from_json(const Json& j, SimConfig c) {
    reject_unknown(j, "config", {"gravity", "cfl", "t_final", "n_frames", "h_dry", "flux_scheme"});
    read(j, "gravity", c.gravity);
    read(j, "cfl", c.cfl);
    read(j, "t_final", c.t_final);
    long long frames = static_cast<long long>(c.n_frames);
    read(j, "n_frames", frames);
    if (frames < 2)
        throw std::invalid_argument("n_frames must be >= 2");
    c.n_frames = static_cast<std::size_t>(frames);
    read(j, "h_dry", c.h_dry);
    if (j.contains("flux_scheme")) {
        std::string name;
        read(j, "flux_scheme", name);
        c.flux_scheme = parse_flux_scheme(name);
    }
    c.validate();
    return c;
}

FamilyParams params_from_json(Family family, const Json& j, FamilyParams base) {
    if (family_of(base) != family)
        base = default_params(family);
    return std::visit([&](const auto& p) -> FamilyParams { return from_json_params(j, p); }, base);
}

ScenarioSpec spec_from_json(const Json& j, ScenarioSpec spec) {
    reject_unknown(j, "scenario", {"id", "seed", "family", "grid", "config", "family_params"});
    if (j.contains("seed")) {
        if (!j.at("seed").is_number_unsigned() && !(j.at("seed").is_number_integer() && j.at("seed").get<long long>() >= 0))
            throw std::invalid_argument("seed must be a non-negative integer");
        spec.seed = j.at("seed").get<std::uint64_t>();
    }
    Family family = spec.family();
    if (j.contains("family")) {
        std::string name;
        read(j, "family", name);
        family = parse_family(name);
    }
    if (j.contains("grid"))
        spec.grid = grid_from_json(j.at("grid"));
    if (j.contains("config"))
        spec.config = config_from_json(j.at("config"), spec.config);
    spec.params = params_from_json(family, j.value("family_params", Json::object()), spec.params);
    return spec;
}

Json to_json(const ShadeParams& s) {
    return {{"light", s.light},
            {"shallow_color", s.shallow_color},
            {"deep_color", s.deep_color},
            {"depth_scale", s.depth_scale},
            {"ambient", s.ambient},
            {"diffuse", s.diffuse},
            {"terrain_low", s.terrain_low},
            {"terrain_high", s.terrain_high},
            {"terrain_min", s.terrain_min},
            {"terrain_max", s.terrain_max},
            {"h_dry", s.h_dry}};
}

ShadeParams style_from_json(const Json& j, ShadeParams s) {
    reject_unknown(j, "style",
                   {"light", "shallow_color", "deep_color", "depth_scale", "ambient", "diffuse",
                    "terrain_low", "terrain_high", "terrain_min", "terrain_max", "h_dry"});
    read(j, "light", s.light);
    read(j, "shallow_color", s.shallow_color);
    read(j, "deep_color", s.deep_color);
    read(j, "depth_scale", s.depth_scale);
    read(j, "ambient", s.ambient);
    read(j, "diffuse", s.diffuse);
    read(j, "terrain_low", s.terrain_low);
    read(j, "terrain_high", s.terrain_high);
    read(j, "terrain_min", s.terrain_min);
    read(j, "terrain_max", s.terrain_max);
    read(j, "h_dry", s.h_dry);
    s.validate();
    return s;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open config file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
    }
}

std::string checksum_hex(std::uint64_t checksum) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(checksum));
    return buf;
}

std::uint64_t parse_checksum_hex(const std::string& text) {
    if (text.size() != 16 || text.find_first_not_of("0123456789abcdef") != std::string::npos)
        throw std::invalid_argument("checksum must be 16 lowercase hex digits");
    return std::stoull(text, nullptr, 16);
}

}  // namespace swegen

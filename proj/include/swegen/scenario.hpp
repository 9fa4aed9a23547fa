#pragma once

#include "swegen/grid.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace swegen {

enum class Family : std::uint8_t {
    random_terrain = 0,
    planar_riverbed = 1,
    gaussian_bump = 2,
    dam_break = 3,
};

std::string_view to_string(Family family) noexcept;
Family parse_family(std::string_view name);

/// Sum of Gaussian hills under a lake at rest with a few Gaussian mounds on
/// the free surface. Widths are fractions of the domain length; hills and
/// mounds are summed over the neighbouring periodic images so the fields are
/// smooth across the wrap.
struct RandomTerrainParams {
    int hills_min = 1;
    int hills_max = 4;
    double hill_amplitude_min = 0.02;
    double hill_amplitude_max = 0.2;
    double hill_width_min = 0.05;
    double hill_width_max = 0.25;
    int mounds_min = 1;
    int mounds_max = 3;
    double mound_total_max = 0.3;  // bound on the summed mound amplitude
    double mound_width_min = 0.05;
    double mound_width_max = 0.15;
    double surface_level = 1.0;

    friend bool operator==(const RandomTerrainParams&, const RandomTerrainParams&) = default;
};

/// Bed a x + b y + c; slopes are metres of drop per domain length.
struct PlanarRiverbedParams {
    double slope_min = -0.1;
    double slope_max = 0.1;
    double offset_min = 0.0;
    double offset_max = 0.1;
    double mound_amplitude_min = 0.05;
    double mound_amplitude_max = 0.3;
    double mound_width_min = 0.05;
    double mound_width_max = 0.15;
    double surface_level = 1.0;

    friend bool operator==(const PlanarRiverbedParams&, const PlanarRiverbedParams&) = default;
};

/// Flat bed, h = 1 + amplitude * exp(-r^2 / (2 sigma^2)). Centre and sigma in
/// metres.
struct GaussianBumpParams {
    double center_x = 0.5;
    double center_y = 0.5;
    double amplitude = 0.2;
    double sigma = 0.1;

    friend bool operator==(const GaussianBumpParams&, const GaussianBumpParams&) = default;
};

enum class DamOrientation : std::uint8_t { x, y };

/// Flat bed; depth h_left on the low half of the chosen axis.
struct DamBreakParams {
    double h_left = 1.0;
    double h_right = 0.1;
    DamOrientation orientation = DamOrientation::x;

    friend bool operator==(const DamBreakParams&, const DamBreakParams&) = default;
};

using FamilyParams =
    std::variant<RandomTerrainParams, PlanarRiverbedParams, GaussianBumpParams, DamBreakParams>;

Family family_of(const FamilyParams& params) noexcept;
FamilyParams default_params(Family family);

/// Everything needed to regenerate a scenario bit-exactly.
struct ScenarioSpec {
    std::uint64_t seed = 0;
    FamilyParams params = GaussianBumpParams{};
    GridSpec grid = GridSpec::unit_square(128);
    SimConfig config{};

    Family family() const noexcept { return family_of(params); }
};

struct Scenario {
    std::string id;
    ScenarioSpec spec;
    Bathymetry bathy;
    ConservedField ic;

    Family family() const noexcept { return spec.family(); }
    const GridSpec& grid() const noexcept { return spec.grid; }
    const SimConfig& config() const noexcept { return spec.config; }
};

struct GeneratedState {
    Bathymetry bathy;
    ConservedField ic;
};

struct Plane {
    double a = 0.0;  // d(bed)/dx
    double b = 0.0;  // d(bed)/dy
    double c = 0.0;
};

struct RiverbedState {
    Bathymetry bathy;
    ConservedField ic;
    Plane plane;
};

GeneratedState gen_random_terrain(std::uint64_t seed, const GridSpec& grid,
                                  const RandomTerrainParams& params = {});
RiverbedState gen_planar_riverbed(std::uint64_t seed, const GridSpec& grid,
                                  const PlanarRiverbedParams& params = {});
GeneratedState gen_gaussian_bump(const GridSpec& grid, const GaussianBumpParams& params = {});
GeneratedState gen_dam_break(const GridSpec& grid, const DamBreakParams& params = {},
                             double h_dry = kDefaultDryDepth);

/// Validates the spec and builds bathymetry and initial condition.
Scenario make_scenario(const ScenarioSpec& spec);

/// Canonical id, e.g. "gaussian_bump-000042".
std::string scenario_id(Family family, std::uint64_t seed);

/// Dataset variant: bump and dam-break families draw their parameters from
/// the seed instead of using the canonical test case.
ScenarioSpec sampled_spec(Family family, std::uint64_t seed, const GridSpec& grid,
                          const SimConfig& config);

}  // namespace swegen

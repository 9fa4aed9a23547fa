#include "swegen/scenario.hpp"

#include "swegen/rng.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace swegen {

namespace {

struct Blob {
    double cx, cy;  // fractions of the domain
    double amplitude;
    double width;   // fraction of the domain
};

/// Gaussian summed over the 3x3 block of periodic images.
double periodic_gaussian(double fx, double fy, const Blob& b) {
    double sum = 0.0;
    for (int oy = -1; oy <= 1; ++oy) {
        for (int ox = -1; ox <= 1; ++ox) {
            const double ddx = fx - b.cx + ox;
            const double ddy = fy - b.cy + oy;
            sum += std::exp(-(ddx * ddx + ddy * ddy) / (2.0 * b.width * b.width));
        }
    }
    return b.amplitude * sum;
}

std::vector<double> blob_field(const GridSpec& grid, const std::vector<Blob>& blobs) {
    std::vector<double> out(grid.cells(), 0.0);
    for (std::size_t j = 0; j < grid.ny(); ++j) {
        const double fy = grid.y_center(j) / grid.length_y();
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const double fx = grid.x_center(i) / grid.length_x();
            double v = 0.0;
            for (const Blob& b : blobs)
                v += periodic_gaussian(fx, fy, b);
            out[grid.index(i, j)] = v;
        }
    }
    return out;
}

Blob draw_blob(SplitMix64& rng, double amp_lo, double amp_hi, double w_lo, double w_hi) {
    Blob b{};
    b.cx = rng.uniform();
    b.cy = rng.uniform();
    b.amplitude = rng.uniform(amp_lo, amp_hi);
    b.width = rng.uniform(w_lo, w_hi);
    return b;
}

void require(bool ok, const char* what) {
    if (!ok)
        throw std::invalid_argument(what);
}

ConservedField wet_state(const GridSpec& grid, const Bathymetry& bathy, double level,
                         const std::vector<double>& mounds) {
    std::vector<double> h(grid.cells());
    const auto s = bathy.s();
    for (std::size_t c = 0; c < h.size(); ++c) {
        h[c] = (level - s[c]) + mounds[c];
        if (!(h[c] > 0.0))
            throw std::invalid_argument("scenario parameters dry cell " + std::to_string(c));
    }
    return ConservedField(grid, std::move(h), std::vector<double>(grid.cells(), 0.0),
                          std::vector<double>(grid.cells(), 0.0));
}

/// Offset of the cell centre from `center` along one axis, in cell units.
/// Centres within 1e-9 cells of a half-integer are snapped so that mirrored
/// cells get exactly negated offsets.
double cell_offset_origin(double center, double spacing) {
    const double c = center / spacing - 0.5;
    const double snapped = std::round(2.0 * c) / 2.0;
    return std::abs(c - snapped) < 1e-9 ? snapped : c;
}

}  // namespace

std::string_view to_string(Family family) noexcept {
    switch (family) {
        case Family::random_terrain: return "random_terrain";
        case Family::planar_riverbed: return "planar_riverbed";
        case Family::gaussian_bump: return "gaussian_bump";
        case Family::dam_break: return "dam_break";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "random_terrain") return Family::random_terrain;
    if (name == "planar_riverbed") return Family::planar_riverbed;
    if (name == "gaussian_bump") return Family::gaussian_bump;
    if (name == "dam_break") return Family::dam_break;
    throw std::invalid_argument("unknown scenario family '" + std::string(name) + "'");
}

Family family_of(const FamilyParams& params) noexcept {
    return static_cast<Family>(params.index());
}

FamilyParams default_params(Family family) {
    switch (family) {
        case Family::random_terrain: return RandomTerrainParams{};
        case Family::planar_riverbed: return PlanarRiverbedParams{};
        case Family::gaussian_bump: return GaussianBumpParams{};
        case Family::dam_break: return DamBreakParams{};
    }
    throw std::invalid_argument("unknown scenario family");
}

GeneratedState gen_random_terrain(std::uint64_t seed, const GridSpec& grid,
                                  const RandomTerrainParams& p) {
    require(p.hills_min >= 1 && p.hills_min <= p.hills_max && p.hills_max <= 12,
            "hill count must satisfy 1 <= min <= max <= 12");
    require(p.hill_amplitude_min >= 0.0 && p.hill_amplitude_min <= p.hill_amplitude_max &&
                p.hill_amplitude_max <= 0.2,
            "hill amplitude must lie in [0, 0.2] m");
    require(p.hill_width_min >= 0.05 && p.hill_width_min <= p.hill_width_max &&
                p.hill_width_max <= 0.25,
            "hill width must lie in [0.05, 0.25] of the domain");
    require(p.mounds_min >= 1 && p.mounds_min <= p.mounds_max && p.mounds_max <= 3,
            "mound count must satisfy 1 <= min <= max <= 3");
    require(p.mound_total_max > 0.0 && p.mound_total_max <= 0.3,
            "mound amplitude must lie in (0, 0.3] m");
    require(p.mound_width_min > 0.0 && p.mound_width_min <= p.mound_width_max,
            "mound width range is empty");
    // Periodic images add at most a few percent on top of a hill's amplitude.
    require(1.05 * p.hills_max * p.hill_amplitude_max < p.surface_level,
            "terrain parameters could rise above the water surface and dry cells");

    SplitMix64 rng(seed);
    std::vector<Blob> hills(static_cast<std::size_t>(rng.integer(p.hills_min, p.hills_max)));
    for (Blob& b : hills)
        b = draw_blob(rng, p.hill_amplitude_min, p.hill_amplitude_max, p.hill_width_min,
                      p.hill_width_max);
    const int mound_count = rng.integer(p.mounds_min, p.mounds_max);
    const double mound_cap = p.mound_total_max / mound_count;
    std::vector<Blob> mounds(static_cast<std::size_t>(mound_count));
    for (Blob& b : mounds)
        b = draw_blob(rng, 0.25 * mound_cap, mound_cap, p.mound_width_min, p.mound_width_max);

    Bathymetry bathy(grid, blob_field(grid, hills));
    ConservedField ic = wet_state(grid, bathy, p.surface_level, blob_field(grid, mounds));
    return {std::move(bathy), std::move(ic)};
}

RiverbedState gen_planar_riverbed(std::uint64_t seed, const GridSpec& grid,
                                  const PlanarRiverbedParams& p) {
    require(p.slope_min >= -0.1 && p.slope_min <= p.slope_max && p.slope_max <= 0.1,
            "slope must lie within +-0.1 m per domain length");
    require(p.offset_min <= p.offset_max, "offset range is empty");
    require(p.mound_amplitude_min >= 0.0 && p.mound_amplitude_min <= p.mound_amplitude_max &&
                p.mound_amplitude_max <= 0.3,
            "mound amplitude must lie in [0, 0.3] m");
    require(p.mound_width_min > 0.0 && p.mound_width_min <= p.mound_width_max,
            "mound width range is empty");

    SplitMix64 rng(seed);
    Plane plane;
    plane.a = rng.uniform(p.slope_min, p.slope_max) / grid.length_x();
    plane.b = rng.uniform(p.slope_min, p.slope_max) / grid.length_y();
    plane.c = rng.uniform(p.offset_min, p.offset_max);
    const Blob mound = draw_blob(rng, p.mound_amplitude_min, p.mound_amplitude_max,
                                 p.mound_width_min, p.mound_width_max);

    std::vector<double> s(grid.cells());
    for (std::size_t j = 0; j < grid.ny(); ++j)
        for (std::size_t i = 0; i < grid.nx(); ++i)
            s[grid.index(i, j)] = plane.a * grid.x_center(i) + plane.b * grid.y_center(j) + plane.c;
    Bathymetry bathy(grid, std::move(s));
    require(bathy.max() < p.surface_level, "riverbed rises above the water surface");
    ConservedField ic = wet_state(grid, bathy, p.surface_level, blob_field(grid, {mound}));
    return {std::move(bathy), std::move(ic), plane};
}

GeneratedState gen_gaussian_bump(const GridSpec& grid, const GaussianBumpParams& p) {
    require(std::isfinite(p.amplitude) && p.amplitude > -1.0,
            "bump amplitude must exceed -1 m (dry core)");
    require(std::isfinite(p.sigma) && p.sigma > 0.0, "bump sigma must be positive");
    require(std::isfinite(p.center_x) && std::isfinite(p.center_y), "bump centre must be finite");

    const double ox = cell_offset_origin(p.center_x, grid.dx());
    const double oy = cell_offset_origin(p.center_y, grid.dy());
    std::vector<double> h(grid.cells());
    for (std::size_t j = 0; j < grid.ny(); ++j) {
        const double ry = (static_cast<double>(j) - oy) * grid.dy();
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const double rx = (static_cast<double>(i) - ox) * grid.dx();
            const double r2 = rx * rx + ry * ry;
            h[grid.index(i, j)] = 1.0 + p.amplitude * std::exp(-r2 / (2.0 * p.sigma * p.sigma));
        }
    }
    return {Bathymetry::flat(grid),
            ConservedField(grid, std::move(h), std::vector<double>(grid.cells(), 0.0),
                           std::vector<double>(grid.cells(), 0.0))};
}

GeneratedState gen_dam_break(const GridSpec& grid, const DamBreakParams& p, double h_dry) {
    require(p.h_left > p.h_right, "dam break requires h_left > h_right");
    require(p.h_right >= h_dry, "dam break requires h_right >= h_dry");
    require(std::isfinite(p.h_left), "dam break depths must be finite");

    std::vector<double> h(grid.cells());
    for (std::size_t j = 0; j < grid.ny(); ++j) {
        for (std::size_t i = 0; i < grid.nx(); ++i) {
            const bool low_side = p.orientation == DamOrientation::x ? i < grid.nx() / 2
                                                                     : j < grid.ny() / 2;
            h[grid.index(i, j)] = low_side ? p.h_left : p.h_right;
        }
    }
    return {Bathymetry::flat(grid),
            ConservedField(grid, std::move(h), std::vector<double>(grid.cells(), 0.0),
                           std::vector<double>(grid.cells(), 0.0))};
}

std::string scenario_id(Family family, std::uint64_t seed) {
    char digits[32];
    std::snprintf(digits, sizeof digits, "%06llu", static_cast<unsigned long long>(seed));
    return std::string(to_string(family)) + "-" + digits;
}

Scenario make_scenario(const ScenarioSpec& spec) {
    spec.config.validate();
    const GridSpec& grid = spec.grid;
    GeneratedState state = std::visit(
        [&](const auto& p) -> GeneratedState {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, RandomTerrainParams>) {
                return gen_random_terrain(spec.seed, grid, p);
            } else if constexpr (std::is_same_v<P, PlanarRiverbedParams>) {
                RiverbedState r = gen_planar_riverbed(spec.seed, grid, p);
                return {std::move(r.bathy), std::move(r.ic)};
            } else if constexpr (std::is_same_v<P, GaussianBumpParams>) {
                return gen_gaussian_bump(grid, p);
            } else {
                return gen_dam_break(grid, p, spec.config.h_dry);
            }
        },
        spec.params);
    return Scenario{scenario_id(spec.family(), spec.seed), spec, std::move(state.bathy),
                    std::move(state.ic)};
}

ScenarioSpec sampled_spec(Family family, std::uint64_t seed, const GridSpec& grid,
                          const SimConfig& config) {
    ScenarioSpec spec{seed, default_params(family), grid, config};
    // Offset the stream so these draws are unrelated to terrain draws of the
    // same seed.
    SplitMix64 rng(seed ^ 0xD1B54A32D192ED03ULL);
    if (family == Family::gaussian_bump) {
        GaussianBumpParams p;
        p.center_x = rng.uniform(0.3, 0.7) * grid.length_x();
        p.center_y = rng.uniform(0.3, 0.7) * grid.length_y();
        p.amplitude = rng.uniform(0.1, 0.4);
        p.sigma = rng.uniform(0.05, 0.12) * std::min(grid.length_x(), grid.length_y());
        spec.params = p;
    } else if (family == Family::dam_break) {
        DamBreakParams p;
        p.h_left = rng.uniform(0.8, 1.5);
        p.h_right = rng.uniform(0.05, 0.5) * p.h_left;
        p.orientation = rng.uniform() < 0.5 ? DamOrientation::x : DamOrientation::y;
        spec.params = p;
    }
    return spec;
}

}  // namespace swegen

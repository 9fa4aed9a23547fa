#pragma once

#include "swegen/grid.hpp"
#include "swegen/solver.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace swegen {

using Rgb = std::array<double, 3>;

/// Lambertian heightfield shading of the free surface.
///
/// For cell c with free surface eta = h + s and periodic centred slopes
///   gx = (eta_E - eta_W) / (2 dx),  gy = (eta_N - eta_S) / (2 dy),
/// the normal is (-gx, -gy, 1) / sqrt(gx^2 + gy^2 + 1) and, with L the
/// normalised light direction,
///   lambert = max(0, ((-gx * Lx) - gy * Ly + Lz) / norm)
///   shade   = ambient + diffuse * lambert.
/// Wet cells (h >= h_dry) take base = shallow + (deep - shallow) * min(1, h / depth_scale);
/// dry cells take base = terrain_low + (terrain_high - terrain_low) * t with
/// t = clamp((s - terrain_min) / (terrain_max - terrain_min), 0, 1).
/// Each channel is floor(clamp(255 * base * shade, 0, 255) + 0.5).
struct ShadeParams {
    Rgb light{-0.4, -0.4, 0.82};
    Rgb shallow_color{0.55, 0.80, 0.95};
    Rgb deep_color{0.05, 0.20, 0.45};
    double depth_scale = 2.0;
    double ambient = 0.35;
    double diffuse = 0.65;
    Rgb terrain_low{0.35, 0.30, 0.20};
    Rgb terrain_high{0.80, 0.75, 0.60};
    double terrain_min = -0.5;
    double terrain_max = 1.0;
    double h_dry = kDefaultDryDepth;

    void validate() const;
};

/// 8-bit RGB, row-major with the same cell order as the fields: pixel (i, j)
/// shows cell (i, j).
struct RgbFrame {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(std::size_t x, std::size_t y, std::size_t channel) const {
        return pixels[3 * (y * width + x) + channel];
    }
    friend bool operator==(const RgbFrame&, const RgbFrame&) = default;
};

RgbFrame shade(const ConservedField& q, const Bathymetry& bathy, const ShadeParams& style = {});

/// Binary PPM: "P6\n<w> <h>\n255\n" followed by raw RGB.
std::vector<std::byte> encode_ppm(const RgbFrame& frame);
RgbFrame decode_ppm(std::span<const std::byte> bytes);
void write_ppm(const std::filesystem::path& path, const RgbFrame& frame);
RgbFrame read_ppm(const std::filesystem::path& path);

/// frame_0000.ppm, frame_0001.ppm, ... in `out_dir` (created if missing).
/// Frames are shaded in parallel; the files are identical for any thread count.
std::vector<std::filesystem::path> render_trajectory(const Trajectory& traj, const ShadeParams& style,
                                                     const std::filesystem::path& out_dir);

/// Sorted frame_*.ppm files of a directory.
std::vector<std::filesystem::path> list_frames(const std::filesystem::path& dir);

}  // namespace swegen

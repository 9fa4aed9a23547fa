#include "swegen/render.hpp"

#include "swegen/error.hpp"
#include "swegen/swt.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace swegen {

namespace fs = std::filesystem;

namespace {

std::uint8_t to_byte(double v) {
    return static_cast<std::uint8_t>(std::floor(std::clamp(v, 0.0, 255.0) + 0.5));
}

}  // namespace

void ShadeParams::validate() const {
    const double norm = std::sqrt(light[0] * light[0] + light[1] * light[1] + light[2] * light[2]);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("light direction must be a non-zero finite vector");
    if (!(depth_scale > 0.0))
        throw std::invalid_argument("depth_scale must be positive");
    if (!(terrain_max > terrain_min))
        throw std::invalid_argument("terrain_max must exceed terrain_min");
    if (!(h_dry > 0.0))
        throw std::invalid_argument("h_dry must be positive");
}

RgbFrame shade(const ConservedField& q, const Bathymetry& bathy, const ShadeParams& style) {
    style.validate();
    const GridSpec& g = q.grid();
    if (!(bathy.grid() == g))
        throw std::invalid_argument("shade: field and bathymetry grids differ");

    const double lnorm = std::sqrt(style.light[0] * style.light[0] + style.light[1] * style.light[1] +
                                   style.light[2] * style.light[2]);
    const double lx = style.light[0] / lnorm;
    const double ly = style.light[1] / lnorm;
    const double lz = style.light[2] / lnorm;

    const auto h = q.h();
    const auto s = bathy.s();
    std::vector<double> eta(g.cells());
    for (std::size_t c = 0; c < eta.size(); ++c)
        eta[c] = h[c] + s[c];

    RgbFrame frame{g.nx(), g.ny(), std::vector<std::uint8_t>(3 * g.cells())};
    for (std::size_t j = 0; j < g.ny(); ++j) {
        const std::size_t jn = j + 1 == g.ny() ? 0 : j + 1;
        const std::size_t js = j == 0 ? g.ny() - 1 : j - 1;
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const std::size_t ie = i + 1 == g.nx() ? 0 : i + 1;
            const std::size_t iw = i == 0 ? g.nx() - 1 : i - 1;
            const std::size_t c = g.index(i, j);
            const double gx = (eta[g.index(ie, j)] - eta[g.index(iw, j)]) / (2.0 * g.dx());
            const double gy = (eta[g.index(i, jn)] - eta[g.index(i, js)]) / (2.0 * g.dy());
            const double norm = std::sqrt(gx * gx + gy * gy + 1.0);
            const double lambert = std::max(0.0, ((-gx * lx) - gy * ly + lz) / norm);
            const double light = style.ambient + style.diffuse * lambert;

            Rgb base;
            if (h[c] >= style.h_dry) {
                const double t = std::min(1.0, h[c] / style.depth_scale);
                for (int k = 0; k < 3; ++k)
                    base[k] = style.shallow_color[k] + (style.deep_color[k] - style.shallow_color[k]) * t;
            } else {
                const double t = std::clamp((s[c] - style.terrain_min) / (style.terrain_max - style.terrain_min),
                                            0.0, 1.0);
                for (int k = 0; k < 3; ++k)
                    base[k] = style.terrain_low[k] + (style.terrain_high[k] - style.terrain_low[k]) * t;
            }
            for (int k = 0; k < 3; ++k)
                frame.pixels[3 * c + k] = to_byte(255.0 * base[k] * light);
        }
    }
    return frame;
}

std::vector<std::byte> encode_ppm(const RgbFrame& frame) {
    if (frame.pixels.size() != 3 * frame.width * frame.height)
        throw std::invalid_argument("frame pixel buffer does not match its size");
    const std::string header =
        "P6\n" + std::to_string(frame.width) + " " + std::to_string(frame.height) + "\n255\n";
    std::vector<std::byte> out(header.size() + frame.pixels.size());
    std::transform(header.begin(), header.end(), out.begin(), [](char ch) { return static_cast<std::byte>(ch); });
    std::transform(frame.pixels.begin(), frame.pixels.end(), out.begin() + static_cast<std::ptrdiff_t>(header.size()),
                   [](std::uint8_t v) { return static_cast<std::byte>(v); });
    return out;
}

RgbFrame decode_ppm(std::span<const std::byte> bytes) {
    std::size_t pos = 0;
    auto next_token = [&]() {
        while (pos < bytes.size() && std::isspace(static_cast<int>(bytes[pos])))
            ++pos;
        std::string tok;
        while (pos < bytes.size() && !std::isspace(static_cast<int>(bytes[pos])))
            tok.push_back(static_cast<char>(bytes[pos++]));
        return tok;
    };
    if (next_token() != "P6")
        throw IoError("ppm: expected P6 header");
    RgbFrame f;
    try {
        f.width = std::stoul(next_token());
        f.height = std::stoul(next_token());
        if (next_token() != "255")
            throw IoError("ppm: only maxval 255 is supported");
    } catch (const std::logic_error&) {
        throw IoError("ppm: malformed header");
    }
    ++pos;  // single whitespace before the raster
    const std::size_t n = 3 * f.width * f.height;
    if (bytes.size() < pos || bytes.size() - pos != n)
        throw IoError("ppm: raster size does not match header");
    f.pixels.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        f.pixels[k] = static_cast<std::uint8_t>(bytes[pos + k]);
    return f;
}

void write_ppm(const fs::path& path, const RgbFrame& frame) { write_file_bytes(path, encode_ppm(frame)); }

RgbFrame read_ppm(const fs::path& path) { return decode_ppm(read_file_bytes(path)); }

std::vector<fs::path> render_trajectory(const Trajectory& traj, const ShadeParams& style,
                                        const fs::path& out_dir) {
    style.validate();
    fs::create_directories(out_dir);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(traj.frames.size());
    std::vector<fs::path> paths(traj.frames.size());
    std::vector<RgbFrame> images(traj.frames.size());

#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t f = 0; f < n; ++f)
        images[static_cast<std::size_t>(f)] = shade(traj.frames[static_cast<std::size_t>(f)], traj.bathy, style);

    for (std::size_t f = 0; f < images.size(); ++f) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%04zu.ppm", f);
        paths[f] = out_dir / name;
        write_ppm(paths[f], images[f]);
    }
    return paths;
}

std::vector<fs::path> list_frames(const fs::path& dir) {
    std::vector<fs::path> out;
    if (!fs::is_directory(dir))
        throw IoError("frame directory '" + dir.string() + "' does not exist");
    for (const auto& item : fs::directory_iterator(dir)) {
        const std::string name = item.path().filename().string();
        if (item.is_regular_file() && name.starts_with("frame_") && name.ends_with(".ppm"))
            out.push_back(item.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace swegen

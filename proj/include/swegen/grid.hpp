#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swegen {

/// Uniform periodic grid. Cells are stored row-major, y outer and x inner,
/// so cell (i, j) lives at index j * nx + i.
class GridSpec {
public:
    static constexpr std::size_t kMinCells = 4;

    GridSpec(std::size_t nx, std::size_t ny, double dx, double dy);

    /// nx by ny cells covering the unit square.
    static GridSpec unit_square(std::size_t nx, std::size_t ny);
    static GridSpec unit_square(std::size_t n) { return unit_square(n, n); }

    std::size_t nx() const noexcept { return nx_; }
    std::size_t ny() const noexcept { return ny_; }
    double dx() const noexcept { return dx_; }
    double dy() const noexcept { return dy_; }
    std::size_t cells() const noexcept { return nx_ * ny_; }
    std::size_t index(std::size_t i, std::size_t j) const noexcept { return j * nx_ + i; }

    double x_center(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * dx_; }
    double y_center(std::size_t j) const noexcept { return (static_cast<double>(j) + 0.5) * dy_; }
    double length_x() const noexcept { return static_cast<double>(nx_) * dx_; }
    double length_y() const noexcept { return static_cast<double>(ny_) * dy_; }

    GridSpec transposed() const { return GridSpec(ny_, nx_, dy_, dx_); }

    friend bool operator==(const GridSpec&, const GridSpec&) = default;

private:
    std::size_t nx_;
    std::size_t ny_;
    double dx_;
    double dy_;
};

/// Conserved state Q = (h, hu, hv) per cell. Immutable once built; the
/// constructor enforces matching plane sizes, finite values and h >= 0.
class ConservedField {
public:
    ConservedField(GridSpec grid, std::vector<double> h, std::vector<double> hu,
                   std::vector<double> hv);

    static ConservedField still_water(GridSpec grid, double depth);

    const GridSpec& grid() const noexcept { return grid_; }
    std::span<const double> h() const noexcept { return h_; }
    std::span<const double> hu() const noexcept { return hu_; }
    std::span<const double> hv() const noexcept { return hv_; }

    /// Swap the x and y axes (and the two momenta).
    ConservedField transposed() const;

    /// Bit-level equality of every plane; distinguishes -0.0 from 0.0.
    bool bit_equal(const ConservedField& other) const noexcept;

private:
    GridSpec grid_;
    std::vector<double> h_;
    std::vector<double> hu_;
    std::vector<double> hv_;
};

/// Bed elevation S(x, y). Also serves as the boundary-condition map handed to
/// the generative model.
class Bathymetry {
public:
    Bathymetry(GridSpec grid, std::vector<double> s);

    static Bathymetry flat(GridSpec grid, double level = 0.0);

    const GridSpec& grid() const noexcept { return grid_; }
    std::span<const double> s() const noexcept { return s_; }
    double max() const noexcept;
    double min() const noexcept;

    Bathymetry transposed() const;
    bool bit_equal(const Bathymetry& other) const noexcept;

private:
    GridSpec grid_;
    std::vector<double> s_;
};

enum class FluxScheme : std::uint8_t { lax_friedrichs = 0, rusanov = 1, roe = 2 };

std::string_view to_string(FluxScheme scheme) noexcept;
FluxScheme parse_flux_scheme(std::string_view name);

inline constexpr double kDefaultGravity = 9.81;
inline constexpr double kDefaultDryDepth = 1e-6;

struct SimConfig {
    double gravity = kDefaultGravity;
    double cfl = 0.45;
    double t_final = 1.5;
    std::size_t n_frames = 21;
    double h_dry = kDefaultDryDepth;
    FluxScheme flux_scheme = FluxScheme::roe;

    /// Throws std::invalid_argument naming the first bad field.
    void validate() const;

    double frame_time(std::size_t f) const noexcept {
        return static_cast<double>(f) * t_final / static_cast<double>(n_frames - 1);
    }

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

/// Still water with a flat free surface at `surface_level` over `bathy`.
ConservedField lake_at_rest(const GridSpec& grid, const Bathymetry& bathy, double surface_level);

/// Sum of h * dx * dy (cubic meters).
double total_mass(const ConservedField& q, const GridSpec& grid);

}  // namespace swegen

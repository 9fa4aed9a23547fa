#include "swegen/kernels.hpp"

#include "swegen/error.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swegen {

namespace {

struct Face {
    FluxTriple flux;
    double depth_minus;  // rebuilt depth on the low-index side
    double depth_plus;   // rebuilt depth on the high-index side
};

StateTriple load(const FieldView& q, std::size_t c) noexcept { return {q.h[c], q.hu[c], q.hv[c]}; }

/// Cell state seen from a face whose bed sits at `bed_face`.
StateTriple rebuild(const StateTriple& q, double bed_cell, double bed_face, double h_dry) noexcept {
    if (bed_cell == bed_face)
        return q;
    const double h = std::max(0.0, q.h + (bed_cell - bed_face));
    if (q.h < h_dry)
        return {std::min(h, q.h), 0.0, 0.0};
    const double scale = h / q.h;
    return {h, q.hu * scale, q.hv * scale};
}

Face face(const StateTriple& qm, const StateTriple& qp, double sm, double sp,
          const SimConfig& cfg, double a_global, Axis axis) {
    const double s_face = 0.5 * (sm + sp);
    const StateTriple lm = rebuild(qm, sm, s_face, cfg.h_dry);
    const StateTriple lp = rebuild(qp, sp, s_face, cfg.h_dry);
    return {interface_flux(cfg.flux_scheme, lm, lp, cfg.gravity, a_global, axis, cfg.h_dry), lm.h,
            lp.h};
}

struct Neighbours {
    std::size_t east, west, north, south;
};

Neighbours neighbours(const GridSpec& g, std::size_t i, std::size_t j) noexcept {
    const std::size_t nx = g.nx(), ny = g.ny();
    return {g.index(i + 1 == nx ? 0 : i + 1, j), g.index(i == 0 ? nx - 1 : i - 1, j),
            g.index(i, j + 1 == ny ? 0 : j + 1), g.index(i, j == 0 ? ny - 1 : j - 1)};
}

/// Assemble one cell's tendency. `east`/`west` are its x faces, `north`/`south`
/// its y faces; the cell sits on the minus side of east/north.
void assemble(std::size_t c, const Neighbours& nb, const Face& east, const Face& west,
              const Face& north, const Face& south, std::span<const double> bed,
              const SimConfig& cfg, const GridSpec& grid, Tendency& out) noexcept {
    const double dx = grid.dx(), dy = grid.dy();
    const double slope_x = (bed[nb.east] - bed[nb.west]) / (2.0 * dx);
    const double slope_y = (bed[nb.north] - bed[nb.south]) / (2.0 * dy);
    const double depth_x = 0.5 * (east.depth_minus + west.depth_plus);
    const double depth_y = 0.5 * (north.depth_minus + south.depth_plus);

    out.h[c] = -(east.flux.f_h - west.flux.f_h) / dx - (north.flux.f_h - south.flux.f_h) / dy;
    out.hu[c] = -(east.flux.f_hu - west.flux.f_hu) / dx -
                (north.flux.f_hu - south.flux.f_hu) / dy - cfg.gravity * depth_x * slope_x;
    out.hv[c] = -(east.flux.f_hv - west.flux.f_hv) / dx -
                (north.flux.f_hv - south.flux.f_hv) / dy - cfg.gravity * depth_y * slope_y;
}

void prepare(const FieldView& q, std::span<const double> bed, Tendency& out) {
    const std::size_t n = q.grid.cells();
    if (q.h.size() != n || q.hu.size() != n || q.hv.size() != n || bed.size() != n)
        throw std::invalid_argument("spatial operator: plane sizes do not match the grid");
    kernels::check_finite(q);
    out.h.resize(n);
    out.hu.resize(n);
    out.hv.resize(n);
}

double cell_speed(const FieldView& q, std::size_t c, const SimConfig& cfg) noexcept {
    const StateTriple s = load(q, c);
    return std::max(max_wave_speed(s, cfg.gravity, Axis::x, cfg.h_dry),
                    max_wave_speed(s, cfg.gravity, Axis::y, cfg.h_dry));
}

}  // namespace

namespace kernels {

void check_finite(const FieldView& q) {
    for (std::size_t c = 0; c < q.h.size(); ++c)
        if (!std::isfinite(q.h[c]) || !std::isfinite(q.hu[c]) || !std::isfinite(q.hv[c]))
            throw NonFiniteError("non-finite state entering spatial operator", c);
}

double max_wave_speed_serial(const FieldView& q, const SimConfig& cfg) {
    double a = 0.0;
    for (std::size_t c = 0; c < q.grid.cells(); ++c)
        a = std::max(a, cell_speed(q, c, cfg));
    return a;
}

double max_wave_speed_parallel(const FieldView& q, const SimConfig& cfg) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(q.grid.cells());
    double a = 0.0;
#pragma omp parallel for reduction(max : a) schedule(static)
    for (std::ptrdiff_t c = 0; c < n; ++c)
        a = std::max(a, cell_speed(q, static_cast<std::size_t>(c), cfg));
    return a;
}

void spatial_operator_serial(const FieldView& q, std::span<const double> bed,
                             const SimConfig& cfg, Tendency& out) {
    prepare(q, bed, out);
    const GridSpec& g = q.grid;
    const double a_global =
        cfg.flux_scheme == FluxScheme::lax_friedrichs ? max_wave_speed_serial(q, cfg) : 0.0;

    for (std::size_t j = 0; j < g.ny(); ++j) {
        for (std::size_t i = 0; i < g.nx(); ++i) {
            const std::size_t c = g.index(i, j);
            const Neighbours nb = neighbours(g, i, j);
            const StateTriple here = load(q, c);
            const Face east = face(here, load(q, nb.east), bed[c], bed[nb.east], cfg, a_global, Axis::x);
            const Face west = face(load(q, nb.west), here, bed[nb.west], bed[c], cfg, a_global, Axis::x);
            const Face north = face(here, load(q, nb.north), bed[c], bed[nb.north], cfg, a_global, Axis::y);
            const Face south = face(load(q, nb.south), here, bed[nb.south], bed[c], cfg, a_global, Axis::y);
            assemble(c, nb, east, west, north, south, bed, cfg, g, out);
        }
    }
}

void spatial_operator_parallel(const FieldView& q, std::span<const double> bed,
                               const SimConfig& cfg, Tendency& out) {
    prepare(q, bed, out);
    const GridSpec& g = q.grid;
    const double a_global =
        cfg.flux_scheme == FluxScheme::lax_friedrichs ? max_wave_speed_parallel(q, cfg) : 0.0;

    // Face k of x_faces is the east face of cell k; likewise north for y_faces.
    std::vector<Face> x_faces(g.cells());
    std::vector<Face> y_faces(g.cells());
    const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(g.ny());

#pragma omp parallel
    {
#pragma omp for schedule(static)
        for (std::ptrdiff_t jj = 0; jj < ny; ++jj) {
            const auto j = static_cast<std::size_t>(jj);
            for (std::size_t i = 0; i < g.nx(); ++i) {
                const std::size_t c = g.index(i, j);
                const Neighbours nb = neighbours(g, i, j);
                const StateTriple here = load(q, c);
                x_faces[c] = face(here, load(q, nb.east), bed[c], bed[nb.east], cfg, a_global, Axis::x);
                y_faces[c] = face(here, load(q, nb.north), bed[c], bed[nb.north], cfg, a_global, Axis::y);
            }
        }

#pragma omp for schedule(static)
        for (std::ptrdiff_t jj = 0; jj < ny; ++jj) {
            const auto j = static_cast<std::size_t>(jj);
            for (std::size_t i = 0; i < g.nx(); ++i) {
                const std::size_t c = g.index(i, j);
                const Neighbours nb = neighbours(g, i, j);
                assemble(c, nb, x_faces[c], x_faces[nb.west], y_faces[c], y_faces[nb.south], bed,
                         cfg, g, out);
            }
        }
    }
}

}  // namespace kernels

Tendency spatial_operator(const ConservedField& q, const Bathymetry& bathy, const SimConfig& cfg,
                          Execution exec) {
    if (!(q.grid() == bathy.grid()))
        throw std::invalid_argument("spatial operator: field and bathymetry grids differ");
    Tendency out;
    if (exec == Execution::serial)
        kernels::spatial_operator_serial(FieldView::of(q), bathy.s(), cfg, out);
    else
        kernels::spatial_operator_parallel(FieldView::of(q), bathy.s(), cfg, out);
    return out;
}

double max_field_wave_speed(const ConservedField& q, const SimConfig& cfg, Execution exec) {
    return exec == Execution::serial ? kernels::max_wave_speed_serial(FieldView::of(q), cfg)
                                     : kernels::max_wave_speed_parallel(FieldView::of(q), cfg);
}

}  // namespace swegen

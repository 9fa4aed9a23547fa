#pragma once

#include "swegen/flux.hpp"
#include "swegen/grid.hpp"

#include <span>
#include <vector>

namespace swegen {

/// dQ/dt on every cell, same layout as a ConservedField but unconstrained in
/// sign.
struct Tendency {
    std::vector<double> h;
    std::vector<double> hu;
    std::vector<double> hv;
};

/// Raw read-only view of the three conserved planes.
struct FieldView {
    GridSpec grid;
    std::span<const double> h;
    std::span<const double> hu;
    std::span<const double> hv;

    static FieldView of(const ConservedField& q) { return {q.grid(), q.h(), q.hu(), q.hv()}; }
};

enum class Execution { serial, parallel };

namespace kernels {

/// Cell-by-cell reference evaluation. Every interface flux is recomputed by
/// both cells that share it.
void spatial_operator_serial(const FieldView& q, std::span<const double> bed,
                             const SimConfig& cfg, Tendency& out);

/// OpenMP evaluation: interface fluxes are computed once into face arrays,
/// then differenced. Bit-identical to the serial path for any thread count.
void spatial_operator_parallel(const FieldView& q, std::span<const double> bed,
                               const SimConfig& cfg, Tendency& out);

/// Largest |u_axis| + sqrt(g h) over cells and both axes.
double max_wave_speed_serial(const FieldView& q, const SimConfig& cfg);
double max_wave_speed_parallel(const FieldView& q, const SimConfig& cfg);

/// Throws NonFiniteError naming the first non-finite cell.
void check_finite(const FieldView& q);

}  // namespace kernels

/// L(Q) = -(F_e - F_w)/dx - (G_n - G_s)/dy + S with periodic wrap.
///
/// Interface states are rebuilt from the free surface before entering the
/// Riemann solver: on the face between cells a and b the bed is taken as
/// (S_a + S_b)/2 and each side's depth as eta - S_face, with momentum scaled
/// to keep the cell velocity. The bed-slope source uses the centred
/// difference (S_{i+1} - S_{i-1}) / (2 dx) times the mean of the cell's two
/// rebuilt face depths. On a flat bed this is exactly the plain first-order
/// scheme; over any bed it holds a lake at rest to rounding.
Tendency spatial_operator(const ConservedField& q, const Bathymetry& bathy, const SimConfig& cfg,
                          Execution exec = Execution::parallel);

double max_field_wave_speed(const ConservedField& q, const SimConfig& cfg,
                            Execution exec = Execution::parallel);

}  // namespace swegen

#pragma once

#include "swegen/grid.hpp"

namespace swegen {

/// Conserved state of a single cell.
struct StateTriple {
    double h = 0.0;
    double hu = 0.0;
    double hv = 0.0;

    friend bool operator==(const StateTriple&, const StateTriple&) = default;
};

/// Flux of (h, hu, hv) through a unit-length interface.
struct FluxTriple {
    double f_h = 0.0;
    double f_hu = 0.0;
    double f_hv = 0.0;

    friend bool operator==(const FluxTriple&, const FluxTriple&) = default;
};

enum class Axis { x, y };

enum class EntropyFix { none, harten };

/// Exchange the roles of hu and hv. y-direction quantities are computed by
/// evaluating the x-direction formula on swapped states and swapping back,
/// which makes the two axes bit-for-bit symmetric.
constexpr StateTriple swap_momenta(const StateTriple& q) noexcept { return {q.h, q.hv, q.hu}; }
constexpr FluxTriple swap_momenta(const FluxTriple& f) noexcept { return {f.f_h, f.f_hv, f.f_hu}; }

/// F(Q) = (hu, hu^2/h + g h^2 / 2, huv). Cells shallower than h_dry carry no
/// velocity.
FluxTriple physical_flux_x(const StateTriple& q, double g, double h_dry = kDefaultDryDepth);
/// G(Q) = (hv, huv, hv^2/h + g h^2 / 2).
FluxTriple physical_flux_y(const StateTriple& q, double g, double h_dry = kDefaultDryDepth);
FluxTriple physical_flux(const StateTriple& q, double g, Axis axis,
                         double h_dry = kDefaultDryDepth);

/// |u_axis| + sqrt(g h); zero for dry cells.
double max_wave_speed(const StateTriple& q, double g, Axis axis, double h_dry = kDefaultDryDepth);

/// Local Lax-Friedrichs flux with a = max of the two cells' wave speeds.
FluxTriple rusanov_flux(const StateTriple& ql, const StateTriple& qr, double g, Axis axis,
                        double h_dry = kDefaultDryDepth);

/// Central flux with dissipation a_global * (qr - ql) / 2. a_global should
/// bound the wave speed of the whole field. Throws std::invalid_argument when
/// a_global <= 0 and the states differ.
FluxTriple lax_friedrichs_flux(const StateTriple& ql, const StateTriple& qr, double g,
                               double a_global, Axis axis, double h_dry = kDefaultDryDepth);

/// Roe flux for the shallow water system with the usual linearisation
/// (sqrt(h)-weighted velocities, arithmetic-mean depth). The Harten fix
/// replaces |lambda| by (lambda^2 + delta^2) / (2 delta) when |lambda| < delta,
/// delta = 0.1 c_hat. If both states are dry only the central part remains.
FluxTriple roe_flux(const StateTriple& ql, const StateTriple& qr, double g, Axis axis,
                    double h_dry = kDefaultDryDepth, EntropyFix fix = EntropyFix::harten);

/// Interface flux of `scheme`. `a_global` is only read by Lax-Friedrichs.
FluxTriple interface_flux(FluxScheme scheme, const StateTriple& ql, const StateTriple& qr,
                          double g, double a_global, Axis axis, double h_dry);

/// Exact (Stoker) solution of the 1D dam break with still water on both
/// sides: depth h_l for x < 0, h_r for x > 0, h_l > h_r >= 0.
class DamBreakSolution {
public:
    DamBreakSolution(double h_l, double h_r, double g = kDefaultGravity);

    /// State at similarity coordinate x / t (momentum is hu; hv is zero).
    StateTriple at(double x_over_t) const;

    double h_left() const noexcept { return h_l_; }
    double h_right() const noexcept { return h_r_; }
    /// Depth and velocity between the rarefaction and the shock.
    double h_middle() const noexcept { return h_m_; }
    double u_middle() const noexcept { return u_m_; }
    /// Shock speed (the dry front speed 2 sqrt(g h_l) when h_r == 0).
    double front_speed() const noexcept { return front_speed_; }
    /// Tail speed of the rarefaction fan, u_m - sqrt(g h_m).
    double fan_tail_speed() const noexcept;
    /// Head speed of the rarefaction fan, -sqrt(g h_l).
    double fan_head_speed() const noexcept;

private:
    double h_l_, h_r_, g_;
    double h_m_ = 0.0;
    double u_m_ = 0.0;
    double front_speed_ = 0.0;
};

StateTriple exact_dam_break(double h_l, double h_r, double g, double x_over_t);

}  // namespace swegen

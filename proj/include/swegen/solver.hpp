#pragma once

#include "swegen/grid.hpp"
#include "swegen/kernels.hpp"
#include "swegen/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace swegen {

struct StepReport {
    double dt_used = 0.0;
    double max_wave_speed = 0.0;
    double mass_before = 0.0;
    double mass_after = 0.0;
    /// Mass the clamp adds to the returned state (m^3). A first-stage clamp
    /// counts half, since that stage is averaged with the old state.
    double clamped_mass = 0.0;
};

struct StepResult {
    ConservedField q;
    StepReport report;
};

/// Frames at t_f = f * t_final / (n_frames - 1). frames[0] is the initial
/// condition bit for bit.
struct Trajectory {
    std::string scenario_id;
    std::uint64_t seed = 0;
    FamilyParams params;
    SimConfig config;
    Bathymetry bathy;
    std::vector<ConservedField> frames;

    Family family() const noexcept { return family_of(params); }
    const GridSpec& grid() const noexcept { return bathy.grid(); }
    double frame_time(std::size_t f) const noexcept { return config.frame_time(f); }
};

struct RunSummary {
    std::size_t steps = 0;
    double min_dt = 0.0;
    double max_dt = 0.0;
    double mass_initial = 0.0;
    double mass_final = 0.0;
    double clamped_mass = 0.0;

    double relative_mass_drift() const noexcept {
        return mass_initial == 0.0 ? mass_final : (mass_final - mass_initial) / mass_initial;
    }
};

struct RunResult {
    Trajectory trajectory;
    RunSummary summary;
};

/// cfl * min(dx, dy) / a_max; t_final for a field without waves.
double stable_dt(const ConservedField& q, const SimConfig& cfg,
                 Execution exec = Execution::parallel);

/// Second-order TVD Runge-Kutta (Heun form):
///   Q*      = Q + dt L(Q)
///   Q^{n+1} = Q/2 + (Q* + dt L(Q*))/2
/// Negative depths after either stage are set to zero with their momenta.
StepResult rk2_step(const ConservedField& q, const Bathymetry& bathy, const SimConfig& cfg,
                    double dt, Execution exec = Execution::parallel);

/// Smallest step run() accepts before aborting.
inline constexpr double kMinTimeStep = 1e-12;

/// Integrate to t_final, shortening the step to land exactly on each frame
/// time. Throws SolverError on non-finite states or dt underflow.
RunResult run_detailed(const Scenario& scenario, Execution exec = Execution::parallel);
Trajectory run(const Scenario& scenario, Execution exec = Execution::parallel);

}  // namespace swegen

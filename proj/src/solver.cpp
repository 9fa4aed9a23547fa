#include "swegen/solver.hpp"

#include "swegen/error.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <sstream>

namespace swegen {

namespace {

/// Zero out cells whose depth went negative; returns the removed deficit (m).
double clamp_dry(std::vector<double>& h, std::vector<double>& hu, std::vector<double>& hv) {
    double deficit = 0.0;
    for (std::size_t c = 0; c < h.size(); ++c) {
        if (h[c] < 0.0) {
            deficit -= h[c];
            h[c] = 0.0;
            hu[c] = 0.0;
            hv[c] = 0.0;
        }
    }
    return deficit;
}

}  // namespace

double stable_dt(const ConservedField& q, const SimConfig& cfg, Execution exec) {
    const double a_max = max_field_wave_speed(q, cfg, exec);
    if (a_max == 0.0)
        return cfg.t_final;
    return cfg.cfl * std::min(q.grid().dx(), q.grid().dy()) / a_max;
}

StepResult rk2_step(const ConservedField& q, const Bathymetry& bathy, const SimConfig& cfg,
                    double dt, Execution exec) {
    assert(dt <= stable_dt(q, cfg, exec) * (1.0 + 1e-12));
    const GridSpec& grid = q.grid();
    const std::size_t n = grid.cells();
    StepReport report;
    report.dt_used = dt;
    report.max_wave_speed = max_field_wave_speed(q, cfg, exec);
    report.mass_before = total_mass(q, grid);

    const Tendency l0 = spatial_operator(q, bathy, cfg, exec);
    std::vector<double> h(n), hu(n), hv(n);
    const auto h0 = q.h(), hu0 = q.hu(), hv0 = q.hv();
    for (std::size_t c = 0; c < n; ++c) {
        h[c] = h0[c] + dt * l0.h[c];
        hu[c] = hu0[c] + dt * l0.hu[c];
        hv[c] = hv0[c] + dt * l0.hv[c];
    }
    // the first stage enters the average with weight 1/2
    double deficit = 0.5 * clamp_dry(h, hu, hv);
    const ConservedField stage(grid, std::move(h), std::move(hu), std::move(hv));

    const Tendency l1 = spatial_operator(stage, bathy, cfg, exec);
    std::vector<double> h2(n), hu2(n), hv2(n);
    const auto h1 = stage.h(), hu1 = stage.hu(), hv1 = stage.hv();
    for (std::size_t c = 0; c < n; ++c) {
        h2[c] = 0.5 * h0[c] + 0.5 * (h1[c] + dt * l1.h[c]);
        hu2[c] = 0.5 * hu0[c] + 0.5 * (hu1[c] + dt * l1.hu[c]);
        hv2[c] = 0.5 * hv0[c] + 0.5 * (hv1[c] + dt * l1.hv[c]);
    }
    deficit += clamp_dry(h2, hu2, hv2);

    ConservedField next(grid, std::move(h2), std::move(hu2), std::move(hv2));
    report.mass_after = total_mass(next, grid);
    report.clamped_mass = deficit * grid.dx() * grid.dy();
    return {std::move(next), report};
}

RunResult run_detailed(const Scenario& scenario, Execution exec) {
    const SimConfig& cfg = scenario.config();
    cfg.validate();

    Trajectory traj{scenario.id, scenario.spec.seed, scenario.spec.params, cfg, scenario.bathy, {}};
    traj.frames.reserve(cfg.n_frames);
    traj.frames.push_back(scenario.ic);

    RunSummary summary;
    summary.min_dt = std::numeric_limits<double>::infinity();
    summary.mass_initial = total_mass(scenario.ic, scenario.grid());

    ConservedField q = scenario.ic;
    double t = 0.0;
    for (std::size_t f = 1; f < cfg.n_frames; ++f) {
        const double target = cfg.frame_time(f);
        while (t < target) {
            const double remaining = target - t;
            double dt = stable_dt(q, cfg, exec);
            bool lands = false;
            if (dt >= remaining) {
                dt = remaining;
                lands = true;
            } else if (2.0 * dt > remaining) {
                // Two equal steps instead of a full one plus a sliver.
                dt = 0.5 * remaining;
            }
            if (dt < kMinTimeStep) {
                std::ostringstream msg;
                msg << scenario.id << ": time step underflow (dt=" << dt << " s at t=" << t << " s)";
                throw SolverError(msg.str());
            }
            try {
                StepResult step = rk2_step(q, traj.bathy, cfg, dt, exec);
                q = std::move(step.q);
                summary.clamped_mass += step.report.clamped_mass;
            } catch (const NonFiniteError& e) {
                std::ostringstream msg;
                msg << scenario.id << ": solver produced a non-finite state at t=" << t
                    << " s after " << summary.steps << " steps: " << e.what();
                throw SolverError(msg.str());
            }
            ++summary.steps;
            summary.min_dt = std::min(summary.min_dt, dt);
            summary.max_dt = std::max(summary.max_dt, dt);
            t = lands ? target : t + dt;
        }
        traj.frames.push_back(q);
    }
    summary.mass_final = total_mass(q, scenario.grid());
    if (summary.steps == 0)
        summary.min_dt = 0.0;
    return {std::move(traj), summary};
}

Trajectory run(const Scenario& scenario, Execution exec) {
    return run_detailed(scenario, exec).trajectory;
}

}  // namespace swegen

#include "swegen/verification.hpp"

#include "swegen/flux.hpp"
#include "swegen/scenario.hpp"
#include "swegen/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace swegen {

double DamBreakStrip::domain_length() const {
    const DamBreakSolution exact(h_left, h_right, config.gravity);
    const double reach = std::max(-exact.fan_head_speed(), exact.front_speed()) * t;
    return std::max(2.0, 4.4 * reach);
}

double dam_break_strip_exact_depth(const DamBreakStrip& setup, double x) {
    const DamBreakSolution exact(setup.h_left, setup.h_right, setup.config.gravity);
    const double length = setup.domain_length();
    if (x >= 0.25 * length && x < 0.75 * length)
        return exact.at((x - 0.5 * length) / setup.t).h;
    // Reversed dam at the seam: shallow water on its left, deep on its right.
    const double offset = x < 0.25 * length ? x : x - length;
    return exact.at(-offset / setup.t).h;
}

DamBreakError dam_break_error(const DamBreakStrip& setup, Execution exec) {
    if (setup.cells < 8 || setup.cells % 2 != 0)
        throw std::invalid_argument("dam break strip needs an even cell count >= 8");
    if (!(setup.t > 0.0))
        throw std::invalid_argument("dam break time must be positive");

    const double length = setup.domain_length();
    const double dx = length / static_cast<double>(setup.cells);
    ScenarioSpec spec;
    spec.grid = GridSpec(setup.cells, 4, dx, dx);
    spec.params = DamBreakParams{setup.h_left, setup.h_right, DamOrientation::x};
    spec.config = setup.config;
    spec.config.t_final = setup.t;
    spec.config.n_frames = 2;

    const Trajectory traj = run(make_scenario(spec), exec);
    const auto h = traj.frames.back().h();
    double err = 0.0;
    for (std::size_t i = 0; i < setup.cells; ++i)
        err += std::abs(h[i] - dam_break_strip_exact_depth(setup, spec.grid.x_center(i))) * dx;
    return {setup.cells, err};
}

std::vector<DamBreakError> dam_break_convergence(DamBreakStrip setup, std::size_t levels,
                                                 Execution exec) {
    std::vector<DamBreakError> out;
    for (std::size_t l = 0; l < levels; ++l) {
        out.push_back(dam_break_error(setup, exec));
        setup.cells *= 2;
    }
    return out;
}

std::vector<double> observed_orders(const std::vector<DamBreakError>& errors) {
    std::vector<double> orders;
    for (std::size_t l = 1; l < errors.size(); ++l)
        orders.push_back(std::log2(errors[l - 1].l1_h / errors[l].l1_h));
    return orders;
}

}  // namespace swegen

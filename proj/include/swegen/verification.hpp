#pragma once

#include "swegen/grid.hpp"
#include "swegen/kernels.hpp"

#include <cstddef>
#include <vector>

namespace swegen {

/// Setup of a quasi-1D dam break on an nx-by-4 periodic strip. The strip is
/// long enough that the waves from the dam and from the reversed jump at the
/// periodic seam never meet before `t`, so the exact solution is the Stoker
/// profile around the dam plus its mirror image around the seam.
struct DamBreakStrip {
    double h_left = 1.0;
    double h_right = 0.1;
    double t = 0.1;
    std::size_t cells = 128;
    SimConfig config{};  // t_final and n_frames are overridden

    double domain_length() const;
};

struct DamBreakError {
    std::size_t cells = 0;
    double l1_h = 0.0;  // integral of |h - h_exact| over the strip (m^2)
};

/// Exact depth on the strip at position x.
double dam_break_strip_exact_depth(const DamBreakStrip& setup, double x);

DamBreakError dam_break_error(const DamBreakStrip& setup, Execution exec = Execution::parallel);

/// Errors on cells, 2 cells, 4 cells, ... (`levels` grids).
std::vector<DamBreakError> dam_break_convergence(DamBreakStrip setup, std::size_t levels = 3,
                                                 Execution exec = Execution::parallel);

/// log2(e_coarse / e_fine) for consecutive levels.
std::vector<double> observed_orders(const std::vector<DamBreakError>& errors);

}  // namespace swegen

#pragma once

#include "swegen/render.hpp"
#include "swegen/solver.hpp"

#include <span>
#include <string>
#include <vector>

namespace swegen {

struct PhysicsError {
    double l1_h = 0.0;   // mean |pred - ref| over cells and frames
    double l1_hu = 0.0;
    double l1_hv = 0.0;
    double l1_mean = 0.0;
    /// 100 * max(0, 1 - sum_v |pred_v - ref_v|_1 / sum_v |ref_v - mean(ref_v)|_1)
    double accuracy_pct = 100.0;
};

/// Frames must share one grid and count. Throws std::invalid_argument on
/// shape mismatch.
PhysicsError physics_l1(std::span<const ConservedField> pred, std::span<const ConservedField> ref);
PhysicsError physics_l1(const Trajectory& pred, const Trajectory& ref);

/// 10 log10(255^2 / MSE) over every byte; +infinity for identical frames.
double psnr(const RgbFrame& a, const RgbFrame& b);

inline constexpr std::size_t kSsimWindow = 11;
inline constexpr double kSsimSigma = 1.5;

/// Mean SSIM: 11x11 Gaussian window (sigma 1.5) over the positions where the
/// window fits inside the image, K1 = 0.01, K2 = 0.03, range 255, computed per
/// RGB channel and averaged. Needs at least 11x11 pixels.
double ssim(const RgbFrame& a, const RgbFrame& b);

struct TimingRow {
    std::string resolution;
    std::string method;
    double sim_seconds = 0.0;
    double render_seconds = 0.0;
    double accuracy_pct = -1.0;  // negative: not applicable

    double total_seconds() const noexcept { return sim_seconds + render_seconds; }
};

/// The classical simulate-then-render timings reported for the original
/// pipeline (Clawpack + Blender) at 128^2, 256^2 and 512^2.
std::vector<TimingRow> reference_classical_timings();

/// Aligned table with columns Resolution | Method | Sim. | Render | Total | Accuracy (%).
std::string format_timing_table(const std::vector<TimingRow>& rows);

}  // namespace swegen

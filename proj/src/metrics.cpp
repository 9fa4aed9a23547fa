#include "swegen/metrics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace swegen {

namespace {

std::array<double, kSsimWindow> gaussian_taps() {
    std::array<double, kSsimWindow> w{};
    const double r = static_cast<double>(kSsimWindow / 2);
    double sum = 0.0;
    for (std::size_t k = 0; k < kSsimWindow; ++k) {
        const double x = static_cast<double>(k) - r;
        w[k] = std::exp(-(x * x) / (2.0 * kSsimSigma * kSsimSigma));
        sum += w[k];
    }
    for (double& v : w)
        v /= sum;
    return w;
}

/// Separable 'valid' Gaussian filter of a width x height plane.
std::vector<double> filter_valid(const std::vector<double>& in, std::size_t width, std::size_t height,
                                 const std::array<double, kSsimWindow>& taps) {
    const std::size_t ow = width - kSsimWindow + 1;
    const std::size_t oh = height - kSsimWindow + 1;
    std::vector<double> rows(ow * height);
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t k = 0; k < kSsimWindow; ++k)
                acc += taps[k] * in[y * width + x + k];
            rows[y * ow + x] = acc;
        }
    std::vector<double> out(ow * oh);
    for (std::size_t y = 0; y < oh; ++y)
        for (std::size_t x = 0; x < ow; ++x) {
            double acc = 0.0;
            for (std::size_t k = 0; k < kSsimWindow; ++k)
                acc += taps[k] * rows[(y + k) * ow + x];
            out[y * ow + x] = acc;
        }
    return out;
}

void require_same_shape(const RgbFrame& a, const RgbFrame& b) {
    if (a.width != b.width || a.height != b.height || a.pixels.size() != b.pixels.size() ||
        a.pixels.size() != 3 * a.width * a.height)
        throw std::invalid_argument("image dimensions differ");
}

}  // namespace

PhysicsError physics_l1(std::span<const ConservedField> pred, std::span<const ConservedField> ref) {
    if (pred.size() != ref.size() || ref.empty())
        throw std::invalid_argument("physics_l1: frame counts differ");
    const GridSpec& grid = ref.front().grid();
    for (std::size_t f = 0; f < ref.size(); ++f)
        if (!(pred[f].grid() == grid) || !(ref[f].grid() == grid))
            throw std::invalid_argument("physics_l1: grids differ");

    const double count = static_cast<double>(grid.cells() * ref.size());
    using Plane = std::span<const double> (ConservedField::*)() const noexcept;
    const std::array<Plane, 3> planes{&ConservedField::h, &ConservedField::hu, &ConservedField::hv};
    std::array<double, 3> abs_err{}, spread{};
    for (std::size_t v = 0; v < 3; ++v) {
        double mean = 0.0;
        for (const ConservedField& r : ref)
            for (double x : (r.*planes[v])())
                mean += x;
        mean /= count;
        for (std::size_t f = 0; f < ref.size(); ++f) {
            const auto p = (pred[f].*planes[v])();
            const auto r = (ref[f].*planes[v])();
            for (std::size_t c = 0; c < r.size(); ++c) {
                abs_err[v] += std::abs(p[c] - r[c]);
                spread[v] += std::abs(r[c] - mean);
            }
        }
    }

    PhysicsError e;
    e.l1_h = abs_err[0] / count;
    e.l1_hu = abs_err[1] / count;
    e.l1_hv = abs_err[2] / count;
    e.l1_mean = (e.l1_h + e.l1_hu + e.l1_hv) / 3.0;
    const double num = abs_err[0] + abs_err[1] + abs_err[2];
    const double den = spread[0] + spread[1] + spread[2];
    if (den > 0.0)
        e.accuracy_pct = 100.0 * std::max(0.0, 1.0 - num / den);
    else
        e.accuracy_pct = num == 0.0 ? 100.0 : 0.0;
    return e;
}

PhysicsError physics_l1(const Trajectory& pred, const Trajectory& ref) {
    return physics_l1(std::span(pred.frames), std::span(ref.frames));
}

double psnr(const RgbFrame& a, const RgbFrame& b) {
    require_same_shape(a, b);
    double sq = 0.0;
    for (std::size_t k = 0; k < a.pixels.size(); ++k) {
        const double d = static_cast<double>(a.pixels[k]) - static_cast<double>(b.pixels[k]);
        sq += d * d;
    }
    if (sq == 0.0)
        return std::numeric_limits<double>::infinity();
    const double mse = sq / static_cast<double>(a.pixels.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double ssim(const RgbFrame& a, const RgbFrame& b) {
    require_same_shape(a, b);
    if (a.width < kSsimWindow || a.height < kSsimWindow)
        throw std::invalid_argument("ssim needs images of at least 11x11 pixels");

    const auto taps = gaussian_taps();
    const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
    const double c2 = (0.03 * 255.0) * (0.03 * 255.0);
    const std::size_t n = a.width * a.height;

    double total = 0.0;
    for (std::size_t ch = 0; ch < 3; ++ch) {
        std::vector<double> x(n), y(n), xx(n), yy(n), xy(n);
        for (std::size_t p = 0; p < n; ++p) {
            x[p] = a.pixels[3 * p + ch];
            y[p] = b.pixels[3 * p + ch];
            xx[p] = x[p] * x[p];
            yy[p] = y[p] * y[p];
            xy[p] = x[p] * y[p];
        }
        const auto mx = filter_valid(x, a.width, a.height, taps);
        const auto my = filter_valid(y, a.width, a.height, taps);
        const auto mxx = filter_valid(xx, a.width, a.height, taps);
        const auto myy = filter_valid(yy, a.width, a.height, taps);
        const auto mxy = filter_valid(xy, a.width, a.height, taps);

        double sum = 0.0;
        for (std::size_t p = 0; p < mx.size(); ++p) {
            const double vx = mxx[p] - mx[p] * mx[p];
            const double vy = myy[p] - my[p] * my[p];
            const double cov = mxy[p] - mx[p] * my[p];
            sum += ((2.0 * mx[p] * my[p] + c1) * (2.0 * cov + c2)) /
                   ((mx[p] * mx[p] + my[p] * my[p] + c1) * (vx + vy + c2));
        }
        total += sum / static_cast<double>(mx.size());
    }
    return total / 3.0;
}

std::vector<TimingRow> reference_classical_timings() {
    return {{"128x128", "Classical (reference)", 5.6, 572.0, -1.0},
            {"256x256", "Classical (reference)", 10.3, 788.0, -1.0},
            {"512x512", "Classical (reference)", 18.9, 1463.0, -1.0}};
}

std::string format_timing_table(const std::vector<TimingRow>& rows) {
    std::ostringstream out;
    char line[160];
    std::snprintf(line, sizeof line, "%-10s | %-22s | %9s | %9s | %9s | %12s\n", "Resolution", "Method",
                  "Sim.", "Render", "Total", "Accuracy (%)");
    out << line << std::string(86, '-') << '\n';
    for (const TimingRow& r : rows) {
        char acc[32];
        if (r.accuracy_pct < 0.0)
            std::snprintf(acc, sizeof acc, "%s", "-");
        else
            std::snprintf(acc, sizeof acc, "%.1f", r.accuracy_pct);
        std::snprintf(line, sizeof line, "%-10s | %-22s | %9.3f | %9.3f | %9.3f | %12s\n",
                      r.resolution.c_str(), r.method.c_str(), r.sim_seconds, r.render_seconds,
                      r.total_seconds(), acc);
        out << line;
    }
    return out.str();
}

}  // namespace swegen

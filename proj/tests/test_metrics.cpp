#include "swegen/metrics.hpp"
#include "swegen/rng.hpp"
#include "swegen/swt.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace swegen;

namespace {

RgbFrame noise_frame(std::size_t w, std::size_t h, std::uint64_t seed) {
    SplitMix64 rng(seed);
    RgbFrame f{w, h, std::vector<std::uint8_t>(3 * w * h)};
    for (auto& p : f.pixels)
        p = static_cast<std::uint8_t>(rng.integer(0, 255));
    return f;
}

std::vector<ConservedField> random_frames(std::uint64_t seed, double scale = 1.0) {
    const GridSpec g = GridSpec::unit_square(6);
    SplitMix64 rng(seed);
    std::vector<ConservedField> out;
    for (int f = 0; f < 3; ++f) {
        std::vector<double> h(36), hu(36), hv(36);
        for (std::size_t c = 0; c < 36; ++c) {
            h[c] = scale * rng.uniform(0.5, 1.5);
            hu[c] = scale * rng.uniform(-1, 1);
            hv[c] = scale * rng.uniform(-1, 1);
        }
        out.emplace_back(g, h, hu, hv);
    }
    return out;
}

}  // namespace

TEST(PhysicsL1, MatchesIndependentOracle) {
    const Trajectory pred = read_trajectory(test::data_dir() / "l1_pred.swt");
    const Trajectory ref = read_trajectory(test::data_dir() / "l1_ref.swt");
    const Json ex = test::expected().at("physics_l1");
    const PhysicsError e = physics_l1(pred, ref);
    EXPECT_NEAR(e.l1_h, ex.at("l1_h").get<double>(), 1e-12);
    EXPECT_NEAR(e.l1_hu, ex.at("l1_hu").get<double>(), 1e-12);
    EXPECT_NEAR(e.l1_hv, ex.at("l1_hv").get<double>(), 1e-12);
    EXPECT_NEAR(e.l1_mean, ex.at("l1_mean").get<double>(), 1e-12);
    EXPECT_NEAR(e.accuracy_pct, ex.at("accuracy_pct").get<double>(), 1e-10);
}

TEST(PhysicsL1, ZeroIffEqualAndSymmetric) {
    const auto a = random_frames(1), b = random_frames(2);
    const PhysicsError same = physics_l1(std::span(a), std::span(a));
    EXPECT_EQ(same.l1_mean, 0.0);
    EXPECT_EQ(same.accuracy_pct, 100.0);
    const PhysicsError ab = physics_l1(std::span(a), std::span(b));
    const PhysicsError ba = physics_l1(std::span(b), std::span(a));
    EXPECT_GT(ab.l1_mean, 0.0);
    EXPECT_EQ(ab.l1_h, ba.l1_h);
    EXPECT_EQ(ab.l1_hu, ba.l1_hu);
    EXPECT_EQ(ab.l1_hv, ba.l1_hv);
}

TEST(PhysicsL1, AccuracyIsScaleInvariant) {
    const auto a = random_frames(1), b = random_frames(2);
    const auto a3 = random_frames(1, 3.0), b3 = random_frames(2, 3.0);
    EXPECT_NEAR(physics_l1(std::span(a), std::span(b)).accuracy_pct,
                physics_l1(std::span(a3), std::span(b3)).accuracy_pct, 1e-10);
}

TEST(PhysicsL1, ConstantReferenceEdgeCase) {
    const GridSpec g = GridSpec::unit_square(4);
    const std::vector<ConservedField> ref{ConservedField::still_water(g, 1.0)};
    const std::vector<ConservedField> other{ConservedField::still_water(g, 2.0)};
    EXPECT_EQ(physics_l1(std::span(ref), std::span(ref)).accuracy_pct, 100.0);
    EXPECT_EQ(physics_l1(std::span(other), std::span(ref)).accuracy_pct, 0.0);
}

TEST(PhysicsL1, ShapeMismatch) {
    const auto a = random_frames(1);
    const std::vector<ConservedField> two(a.begin(), a.begin() + 2);
    EXPECT_THROW(physics_l1(std::span(two), std::span(a)), std::invalid_argument);
    const std::vector<ConservedField> other{ConservedField::still_water(GridSpec::unit_square(5), 1.0)};
    const std::vector<ConservedField> one(a.begin(), a.begin() + 1);
    EXPECT_THROW(physics_l1(std::span(other), std::span(one)), std::invalid_argument);
}

TEST(Psnr, IdenticalIsInfinite) {
    const RgbFrame a = noise_frame(12, 12, 1);
    EXPECT_EQ(psnr(a, a), std::numeric_limits<double>::infinity());
}

TEST(Psnr, UnitOffset) {
    RgbFrame a = noise_frame(16, 16, 2);
    for (auto& p : a.pixels)
        p = static_cast<std::uint8_t>(std::min<int>(p, 254));
    RgbFrame b = a;
    for (auto& p : b.pixels)
        ++p;
    EXPECT_NEAR(psnr(a, b), 48.1308, 1e-3);
    EXPECT_NEAR(psnr(a, b), 20.0 * std::log10(255.0), 1e-12);
    EXPECT_EQ(psnr(a, b), psnr(b, a));
}

TEST(Psnr, DimensionMismatch) {
    EXPECT_THROW(psnr(noise_frame(12, 12, 1), noise_frame(12, 13, 1)), std::invalid_argument);
}

TEST(Ssim, IdenticalIsExactlyOne) {
    const RgbFrame a = noise_frame(20, 15, 3);
    EXPECT_EQ(ssim(a, a), 1.0);
}

TEST(Ssim, InvertedCopyIsNegative) {
    RgbFrame a = noise_frame(24, 24, 4);
    for (auto& p : a.pixels)
        if (p == 127 || p == 128)
            p = 0;  // no mid-grey
    RgbFrame inv = a;
    for (auto& p : inv.pixels)
        p = static_cast<std::uint8_t>(255 - p);
    EXPECT_LT(ssim(a, inv), 0.0);
}

TEST(Ssim, SymmetricAndMatchesReference) {
    const RgbFrame a = read_ppm(test::data_dir() / "img_a.ppm");
    const RgbFrame b = read_ppm(test::data_dir() / "img_b.ppm");
    const Json ex = test::expected().at("images");
    EXPECT_NEAR(ssim(a, b), ex.at("ssim").get<double>(), 1e-6);
    EXPECT_NEAR(std::abs(ssim(a, b) - ssim(b, a)), 0.0, 1e-15);
    EXPECT_NEAR(psnr(a, b), ex.at("psnr").get<double>(), 1e-10);
}

TEST(Ssim, TooSmall) {
    EXPECT_THROW(ssim(noise_frame(10, 20, 1), noise_frame(10, 20, 2)), std::invalid_argument);
    EXPECT_NO_THROW(ssim(noise_frame(11, 11, 1), noise_frame(11, 11, 2)));
}

TEST(Timing, ReferenceRowsAndTotals) {
    const auto rows = reference_classical_timings();
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].resolution, "128x128");
    EXPECT_EQ(rows[0].sim_seconds, 5.6);
    EXPECT_EQ(rows[0].render_seconds, 572.0);
    EXPECT_DOUBLE_EQ(rows[0].total_seconds(), 577.6);
    EXPECT_DOUBLE_EQ(rows[1].total_seconds(), 798.3);
    EXPECT_DOUBLE_EQ(rows[2].total_seconds(), 1481.9);
    for (const TimingRow& r : rows)
        EXPECT_EQ(r.total_seconds(), r.sim_seconds + r.render_seconds);
}

TEST(Timing, TableColumns) {
    const std::string t = format_timing_table(reference_classical_timings());
    for (const char* col : {"Resolution", "Sim.", "Render", "Total", "Accuracy (%)"})
        EXPECT_NE(t.find(col), std::string::npos) << col;
    EXPECT_NE(t.find("577.600"), std::string::npos);
}

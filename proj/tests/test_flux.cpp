#include "swegen/flux.hpp"
#include "swegen/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

using namespace swegen;

namespace {

constexpr double g = 9.81;

void expect_flux(const FluxTriple& f, double a, double b, double c, double tol = 1e-14) {
    EXPECT_NEAR(f.f_h, a, tol * std::max(1.0, std::abs(a)));
    EXPECT_NEAR(f.f_hu, b, tol * std::max(1.0, std::abs(b)));
    EXPECT_NEAR(f.f_hv, c, tol * std::max(1.0, std::abs(c)));
}

StateTriple reflect_x(const StateTriple& q) { return {q.h, -q.hu, q.hv}; }

}  // namespace

TEST(PhysicalFlux, XExamples) {
    expect_flux(physical_flux_x({2, 0, 0}, g), 0, 19.62, 0);
    EXPECT_EQ(physical_flux_x({0, 0, 0}, g), (FluxTriple{0, 0, 0}));
    expect_flux(physical_flux_x({1, 2, 0.5}, g), 2, 8.905000000000001, 1.0);
}

TEST(PhysicalFlux, YExamples) {
    expect_flux(physical_flux_y({2, 0, 0}, g), 0, 0, 19.62);
    EXPECT_EQ(physical_flux_y({0, 0, 0}, g), (FluxTriple{0, 0, 0}));
    expect_flux(physical_flux_y({1, 0.5, 2}, g), 2, 1.0, 8.905000000000001);
}

TEST(PhysicalFlux, DryCellCarriesNoVelocity) {
    const FluxTriple f = physical_flux_x({1e-8, 3.0, -2.0}, g);
    EXPECT_EQ(f.f_h, 0.0);
    EXPECT_EQ(f.f_hv, 0.0);
    EXPECT_DOUBLE_EQ(f.f_hu, 0.5 * g * 1e-16);
}

TEST(WaveSpeed, Examples) {
    EXPECT_NEAR(max_wave_speed({1, 0, 0}, g, Axis::x), 3.1320919526731650, 1e-15);
    EXPECT_EQ(max_wave_speed({0, 0, 0}, g, Axis::x), 0.0);
    EXPECT_NEAR(max_wave_speed({4, 8, 0}, g, Axis::x), 8.26418390534633, 1e-14);
    EXPECT_NEAR(max_wave_speed({4, 0, 8}, g, Axis::y), 8.26418390534633, 1e-14);
}

TEST(Rusanov, ConsistencyAtRest) {
    expect_flux(rusanov_flux({1, 0, 0}, {1, 0, 0}, g, Axis::x), 0, 4.905, 0);
}

TEST(Rusanov, DamBreakPairMatchesOracle) {
    const FluxTriple f = rusanov_flux({2, 0, 0}, {1, 0, 0}, g, Axis::x);
    expect_flux(f, 2.2147234590350102, 12.262500000000001, 0.0);
    EXPECT_NEAR(f.f_h, 0.5 * std::sqrt(g * 2.0), 1e-15);
}

TEST(Rusanov, MirroredInputs) {
    // swap and negate both momenta on a pair with no momentum jump
    const StateTriple l{2, 0, 0}, r{1, 0, 0};
    const FluxTriple f = rusanov_flux(l, r, g, Axis::x);
    const FluxTriple m = rusanov_flux({r.h, -r.hu, -r.hv}, {l.h, -l.hu, -l.hv}, g, Axis::x);
    EXPECT_EQ(m.f_h, -f.f_h);
    EXPECT_EQ(m.f_hu, f.f_hu);
}

TEST(AllSchemes, ReflectionSymmetry) {
    SplitMix64 rng(99);
    for (int k = 0; k < 200; ++k) {
        const StateTriple l{rng.uniform(0.1, 3), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        const StateTriple r{rng.uniform(0.1, 3), rng.uniform(-2, 2), rng.uniform(-2, 2)};
        for (FluxScheme s : {FluxScheme::lax_friedrichs, FluxScheme::rusanov, FluxScheme::roe}) {
            const FluxTriple f = interface_flux(s, l, r, g, 10.0, Axis::x, 1e-6);
            const FluxTriple m = interface_flux(s, reflect_x(r), reflect_x(l), g, 10.0, Axis::x, 1e-6);
            EXPECT_NEAR(m.f_h, -f.f_h, 1e-13 * (1 + std::abs(f.f_h)));
            EXPECT_NEAR(m.f_hu, f.f_hu, 1e-13 * (1 + std::abs(f.f_hu)));
            EXPECT_NEAR(m.f_hv, -f.f_hv, 1e-13 * (1 + std::abs(f.f_hv)));
        }
    }
}

TEST(LaxFriedrichs, ConsistencyIsExact) {
    const StateTriple q{1.3, 0.7, -0.4};
    EXPECT_EQ(lax_friedrichs_flux(q, q, g, 5.0, Axis::x), physical_flux_x(q, g));
    EXPECT_EQ(lax_friedrichs_flux(q, q, g, 5.0, Axis::y), physical_flux_y(q, g));
}

TEST(LaxFriedrichs, CoincidesWithRusanovAtLocalBound) {
    const StateTriple l{2, 0, 0}, r{1, 0, 0};
    const double a = std::max(max_wave_speed(l, g, Axis::x), max_wave_speed(r, g, Axis::x));
    EXPECT_EQ(lax_friedrichs_flux(l, r, g, a, Axis::x), rusanov_flux(l, r, g, Axis::x));
}

TEST(LaxFriedrichs, DoubleBoundMatchesOracle) {
    const StateTriple l{2, 0, 0}, r{1, 0, 0};
    const double a = std::max(max_wave_speed(l, g, Axis::x), max_wave_speed(r, g, Axis::x));
    expect_flux(lax_friedrichs_flux(l, r, g, 2 * a, Axis::x), 4.4294469180700204, 12.262500000000001, 0.0);
}

TEST(LaxFriedrichs, RejectsNonPositiveSpeedForDistinctStates) {
    EXPECT_THROW(lax_friedrichs_flux({2, 0, 0}, {1, 0, 0}, g, 0.0, Axis::x), std::invalid_argument);
}

TEST(LaxFriedrichs, DissipationOrdering) {
    SplitMix64 rng(5);
    for (int k = 0; k < 100; ++k) {
        const StateTriple l{rng.uniform(0.5, 2), 0, 0}, r{rng.uniform(0.5, 2), 0, 0};
        const double a = std::max(max_wave_speed(l, g, Axis::x), max_wave_speed(r, g, Axis::x));
        const double central = 0.5 * (physical_flux_x(l, g).f_h + physical_flux_x(r, g).f_h);
        const double rus = rusanov_flux(l, r, g, Axis::x).f_h - central;
        const double lf = lax_friedrichs_flux(l, r, g, a * rng.uniform(1.0, 3.0), Axis::x).f_h - central;
        EXPECT_LE(std::abs(rus), std::abs(lf) + 1e-15);
    }
}

TEST(Roe, Consistency) {
    const StateTriple q{1, 3, 1};
    expect_flux(roe_flux(q, q, g, Axis::x), 3, 9 + 4.905, 3, 1e-15);
}

TEST(Roe, DamBreakPairMatchesOracle) {
    expect_flux(roe_flux({2, 0, 0}, {1, 0, 0}, g, Axis::x), 1.9180067778816632, 12.262500000000001, 0.0);
}

TEST(Roe, HartenFixActsOnTransonicPair) {
    const StateTriple l{1.0, 2.832, 0.0}, r{0.9, 0.9 * 3.154, 0.0};
    const FluxTriple fixed = roe_flux(l, r, g, Axis::x, 1e-6, EntropyFix::harten);
    const FluxTriple plain = roe_flux(l, r, g, Axis::x, 1e-6, EntropyFix::none);
    expect_flux(fixed, 2.843172543439388, 12.924508673510445, 0.0, 1e-13);
    expect_flux(plain, 2.8384046099942903, 12.924813942325216, 0.0, 1e-13);
    EXPECT_NE(fixed.f_h, plain.f_h);
}

TEST(Roe, SymmetricRarefactionPairUnaffectedByFix) {
    // u_hat = 0 keeps every |lambda| >= c_hat > delta.
    const StateTriple l{1, -4, 0}, r{1, 4, 0};
    EXPECT_EQ(roe_flux(l, r, g, Axis::x, 1e-6, EntropyFix::harten),
              roe_flux(l, r, g, Axis::x, 1e-6, EntropyFix::none));
}

TEST(Roe, BothDryIsCentral) {
    const StateTriple l{1e-8, 0, 0}, r{2e-8, 0, 0};
    const FluxTriple f = roe_flux(l, r, g, Axis::x);
    EXPECT_TRUE(std::isfinite(f.f_h));
    EXPECT_NEAR(f.f_hu, 0.25 * g * (1e-16 + 4e-16), 1e-30);
}

TEST(Roe, WetDryInterfaceIsFinite) {
    const FluxTriple f = roe_flux({1, 0, 0}, {0, 0, 0}, g, Axis::x);
    EXPECT_TRUE(std::isfinite(f.f_h) && std::isfinite(f.f_hu) && std::isfinite(f.f_hv));
    EXPECT_GT(f.f_h, 0.0);
}

TEST(AllSchemes, YFluxIsSwappedXFlux) {
    SplitMix64 rng(17);
    for (int k = 0; k < 500; ++k) {
        const StateTriple l{rng.uniform(0, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
        const StateTriple r{rng.uniform(0, 3), rng.uniform(-3, 3), rng.uniform(-3, 3)};
        for (FluxScheme s : {FluxScheme::lax_friedrichs, FluxScheme::rusanov, FluxScheme::roe}) {
            const FluxTriple y = interface_flux(s, l, r, g, 12.0, Axis::y, 1e-6);
            const FluxTriple x = interface_flux(s, swap_momenta(l), swap_momenta(r), g, 12.0, Axis::x, 1e-6);
            EXPECT_EQ(y, swap_momenta(x));
        }
    }
}

TEST(AllSchemes, ConsistencyOnRandomStates) {
    SplitMix64 rng(2025);
    for (FluxScheme s : {FluxScheme::lax_friedrichs, FluxScheme::rusanov, FluxScheme::roe}) {
        for (int k = 0; k < 1000; ++k) {
            const StateTriple q{rng.uniform(1e-3, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)};
            for (Axis ax : {Axis::x, Axis::y}) {
                const FluxTriple f = interface_flux(s, q, q, g, 20.0, ax, 1e-6);
                const FluxTriple p = physical_flux(q, g, ax);
                const double scale = std::abs(p.f_h) + std::abs(p.f_hu) + std::abs(p.f_hv);
                EXPECT_LE(std::abs(f.f_h - p.f_h) + std::abs(f.f_hu - p.f_hu) + std::abs(f.f_hv - p.f_hv),
                          1e-13 * scale);
            }
        }
    }
}

TEST(DamBreakExact, FarFieldStates) {
    const double inf = std::numeric_limits<double>::infinity();
    EXPECT_EQ(exact_dam_break(1.0, 0.1, g, -inf), (StateTriple{1.0, 0.0, 0.0}));
    EXPECT_EQ(exact_dam_break(1.0, 0.1, g, inf), (StateTriple{0.1, 0.0, 0.0}));
    EXPECT_EQ(exact_dam_break(1.0, 0.1, g, -1e3), (StateTriple{1.0, 0.0, 0.0}));
    EXPECT_EQ(exact_dam_break(1.0, 0.1, g, 1e3), (StateTriple{0.1, 0.0, 0.0}));
}

TEST(DamBreakExact, MiddleStateMatchesOracle) {
    const DamBreakSolution s(1.0, 0.1, g);
    EXPECT_NEAR(s.h_middle(), 0.3961748167994429, 1e-12);
    EXPECT_NEAR(s.u_middle(), 2.3213549956407444, 1e-11);
    EXPECT_NEAR(s.front_speed(), 3.1051336506682135, 1e-11);
}

TEST(DamBreakExact, RankineHugoniotAndRiemannInvariant) {
    const DamBreakSolution s(1.0, 0.1, g);
    const double hm = s.h_middle(), um = s.u_middle(), S = s.front_speed(), hr = 0.1;
    // Mass and momentum jump conditions across the shock.
    EXPECT_NEAR(S * (hm - hr), hm * um, 1e-10);
    EXPECT_NEAR(S * (hm * um), hm * um * um + 0.5 * g * (hm * hm - hr * hr), 1e-10);
    // u + 2c constant through the fan.
    const double inv = 2.0 * std::sqrt(g * 1.0);
    for (double xi = s.fan_head_speed(); xi <= s.fan_tail_speed(); xi += 0.01) {
        const StateTriple q = s.at(xi);
        EXPECT_NEAR(q.hu / q.h + 2.0 * std::sqrt(g * q.h), inv, 1e-10);
    }
    EXPECT_NEAR(um + 2.0 * std::sqrt(g * hm), inv, 1e-10);
}

TEST(DamBreakExact, DryBedFront) {
    const DamBreakSolution s(1.0, 0.0, g);
    EXPECT_NEAR(s.front_speed(), 2.0 * std::sqrt(g), 1e-12);
    EXPECT_EQ(s.at(2.5 * std::sqrt(g)).h, 0.0);
}

TEST(DamBreakExact, RejectsInvalidDepths) {
    EXPECT_THROW(DamBreakSolution(1.0, 1.0, g), std::invalid_argument);
    EXPECT_THROW(DamBreakSolution(0.1, 1.0, g), std::invalid_argument);
    EXPECT_THROW(DamBreakSolution(1.0, -0.1, g), std::invalid_argument);
}

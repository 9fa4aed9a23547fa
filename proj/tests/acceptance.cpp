// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include "swegen/flux.hpp"
#include "swegen/manifest.hpp"
#include "swegen/metrics.hpp"
#include "swegen/render.hpp"
#include "swegen/rng.hpp"
#include "swegen/scenario.hpp"
#include "swegen/solver.hpp"
#include "swegen/swt.hpp"
#include "swegen/verification.hpp"
#include "support.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

using namespace swegen;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = false;
    std::string detail;
};

// Largest |mirror mismatch| of a frame under x and y reflection.
double mirror_error(const ConservedField& q) {
    const GridSpec& g = q.grid();
    const std::size_t nx = g.nx(), ny = g.ny();
    const auto h = q.h(), hu = q.hu(), hv = q.hv();
    double err = 0.0;
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            const std::size_t c = j * nx + i;
            const std::size_t mx = j * nx + (nx - 1 - i);
            const std::size_t my = (ny - 1 - j) * nx + i;
            err = std::max({err, std::abs(h[c] - h[mx]), std::abs(hu[c] + hu[mx]), std::abs(hv[c] - hv[mx]),
                            std::abs(h[c] - h[my]), std::abs(hu[c] - hu[my]), std::abs(hv[c] + hv[my])});
        }
    return err;
}

std::string fmt(const char* f, double a) {
    char buf[96];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

Outcome mass_conservation() {
    ScenarioSpec spec;
    spec.seed = 11;
    spec.params = RandomTerrainParams{};
    spec.grid = GridSpec::unit_square(128);
    const auto t0 = Clock::now();
    const RunResult r = run_detailed(make_scenario(spec));
    const double secs = seconds_since(t0);
    double min_h = INFINITY;
    for (const auto& f : r.trajectory.frames)
        min_h = std::min(min_h, *std::min_element(f.h().begin(), f.h().end()));
    const double drift = std::abs(r.summary.relative_mass_drift());
    std::ostringstream d;
    d << "128x128 random_terrain 1.5 s, " << r.trajectory.frames.size() << " frames, min h " << min_h
      << ", |drift| " << drift << " (<= 1e-10), " << fmt("%.1f", secs) << " s (<= 60)";
    return {min_h > 0.0 && r.summary.clamped_mass == 0.0 && drift <= 1e-10 && secs <= 60.0, d.str()};
}

Outcome dam_break_exactness() {
    DamBreakStrip setup;
    setup.h_left = 1.0;
    setup.h_right = 0.1;
    setup.t = 0.1;
    setup.cells = 128;
    const auto t0 = Clock::now();
    const auto errors = dam_break_convergence(setup, 3);
    const double secs = seconds_since(t0);
    const auto orders = observed_orders(errors);
    bool ok = secs <= 120.0;
    std::ostringstream d;
    d << "L1(h)";
    for (std::size_t k = 0; k < errors.size(); ++k) {
        d << ' ' << errors[k].cells << ':' << errors[k].l1_h;
        if (k > 0)
            ok = ok && errors[k].l1_h < errors[k - 1].l1_h;
    }
    d << ", orders";
    for (double o : orders) {
        d << ' ' << fmt("%.3f", o);
        ok = ok && o >= 0.6 && o <= 1.3;
    }
    d << " (in [0.6, 1.3]), " << fmt("%.1f", secs) << " s (<= 120)";
    return {ok, d.str()};
}

Outcome well_balanced() {
    const GridSpec g = GridSpec::unit_square(128);
    const GeneratedState terrain = gen_random_terrain(5, g);
    ConservedField q = lake_at_rest(g, terrain.bathy, 1.0);
    SimConfig cfg;
    double worst = 0.0;
    for (int s = 0; s < 200; ++s) {
        q = rk2_step(q, terrain.bathy, cfg, stable_dt(q, cfg)).q;
        for (std::size_t c = 0; c < g.cells(); ++c)
            worst = std::max({worst, std::abs(q.hu()[c]), std::abs(q.hv()[c])});
    }
    return {worst <= 1e-8, "128x128 lake over random terrain, 200 steps, max |hu|,|hv| " + fmt("%.3e", worst) +
                               " (<= 1e-8)"};
}

Outcome flux_consistency() {
    const double g = kDefaultGravity;
    double worst = 0.0;
    SplitMix64 rng(2024);
    for (FluxScheme scheme : {FluxScheme::lax_friedrichs, FluxScheme::rusanov, FluxScheme::roe})
        for (int k = 0; k < 1000; ++k) {
            const StateTriple q{rng.uniform(0.01, 5.0), rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
            for (Axis axis : {Axis::x, Axis::y}) {
                const double a = 2.0 * max_wave_speed(q, g, axis) + 1.0;
                const FluxTriple f = interface_flux(scheme, q, q, g, a, axis, kDefaultDryDepth);
                const FluxTriple p = physical_flux(q, g, axis);
                const double scale = std::max({std::abs(p.f_h), std::abs(p.f_hu), std::abs(p.f_hv)});
                const double diff =
                    std::max({std::abs(f.f_h - p.f_h), std::abs(f.f_hu - p.f_hu), std::abs(f.f_hv - p.f_hv)});
                worst = std::max(worst, diff / scale);
            }
        }
    return {worst <= 1e-13, "3 schemes x 1000 states x 2 axes, max relative error " + fmt("%.3e", worst) +
                                " (<= 1e-13)"};
}

struct BumpRuns {
    Trajectory traj;
    Trajectory transposed;
};

Outcome symmetry(const BumpRuns& runs) {
    double worst = 0.0;
    for (const auto& f : runs.traj.frames)
        worst = std::max(worst, mirror_error(f));
    bool exact = runs.traj.frames.size() == runs.transposed.frames.size();
    for (std::size_t f = 0; exact && f < runs.traj.frames.size(); ++f)
        exact = runs.traj.frames[f].transposed().bit_equal(runs.transposed.frames[f]);
    return {worst <= 1e-10 && exact, "128x128 bump, max mirror error " + fmt("%.3e", worst) +
                                          " (<= 1e-10), transposed run bit-exact: " + (exact ? "yes" : "no")};
}

int run_cli(const fs::path& dir, const std::string& args, const fs::path& out) {
    const std::string cmd = "cd '" + dir.string() + "' && '" + SWEGEN_CLI + "' " + args + " >'" + out.string() +
                            "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome determinism_and_format() {
    test::TempDir dir("accept-ds");
    const int c1 = run_cli(dir.path(), "dataset --count 10 --out j1 --jobs 1", dir / "j1.json");
    const int c4 = run_cli(dir.path(), "dataset --count 10 --out j4 --jobs 4", dir / "j4.json");
    std::string s1 = "?", s4 = "?";
    if (c1 == 0 && c4 == 0) {
        s1 = load_json_file((dir / "j1.json").string()).at("manifest_checksum").get<std::string>();
        s4 = load_json_file((dir / "j4.json").string()).at("manifest_checksum").get<std::string>();
    }
    const bool same_manifest = c1 == 0 && c4 == 0 && s1 == s4;

    ScenarioSpec spec;
    spec.seed = 3;
    spec.params = RandomTerrainParams{};
    spec.grid = GridSpec::unit_square(4);
    spec.config.n_frames = 2;
    spec.config.t_final = 0.01;
    const Trajectory t = run(make_scenario(spec));
    const auto bytes = encode_swt(t);
    const bool round_trip = encode_swt(decode_swt(bytes)) == bytes;
    const bool size_ok = bytes.size() == 936;

    std::ostringstream d;
    d << "dataset N=10 manifest J1 " << s1 << " J4 " << s4 << ", swt round trip "
      << (round_trip ? "byte-exact" : "differs") << ", 4x4/2-frame size " << bytes.size() << " (== 936)";
    return {same_manifest && round_trip && size_ok, d.str()};
}

Outcome pipeline_parity(const BumpRuns& runs) {
    const Trajectory& t = runs.traj;
    const bool frames_ok = t.frames.size() == 21 && t.frame_time(0) == 0.0 && t.frame_time(20) == 1.5;
    test::TempDir a("accept-ra"), b("accept-rb");
    const auto pa = render_trajectory(t, ShadeParams{}, a.path());
    const auto pb = render_trajectory(t, ShadeParams{}, b.path());
    bool same = pa.size() == 21 && pb.size() == 21;
    for (std::size_t f = 0; same && f < pa.size(); ++f)
        same = read_file_bytes(pa[f]) == read_file_bytes(pb[f]);
    std::ostringstream d;
    d << "default run " << t.frames.size() << " frames over [0, " << t.frame_time(t.frames.size() - 1)
      << "] s, " << pa.size() << " PPM files, byte-identical on re-render: " << (same ? "yes" : "no");
    return {frames_ok && same, d.str()};
}

Outcome metrics_oracles() {
    const Json ex = test::expected();
    const PhysicsError e = physics_l1(read_trajectory(test::data_dir() / "l1_pred.swt"),
                                      read_trajectory(test::data_dir() / "l1_ref.swt"));
    const Json& pl = ex.at("physics_l1");
    const double l1_err = std::max({std::abs(e.l1_h - pl.at("l1_h").get<double>()),
                                    std::abs(e.l1_hu - pl.at("l1_hu").get<double>()),
                                    std::abs(e.l1_hv - pl.at("l1_hv").get<double>()),
                                    std::abs(e.l1_mean - pl.at("l1_mean").get<double>())});

    const double s = ssim(read_ppm(test::data_dir() / "img_a.ppm"), read_ppm(test::data_dir() / "img_b.ppm"));
    const double ssim_err = std::abs(s - ex.at("images").at("ssim").get<double>());

    RgbFrame a{32, 32, std::vector<std::uint8_t>(3 * 32 * 32)};
    SplitMix64 rng(8);
    for (auto& p : a.pixels)
        p = static_cast<std::uint8_t>(rng.integer(0, 254));
    RgbFrame b = a;
    for (auto& p : b.pixels)
        ++p;
    const double ps = psnr(a, b);

    std::ostringstream d;
    d << "physics_l1 error " << fmt("%.2e", l1_err) << " (<= 1e-12), SSIM error " << fmt("%.2e", ssim_err)
      << " (<= 1e-6), unit-offset PSNR " << fmt("%.4f", ps) << " dB (48.1308 +- 1e-3)";
    return {l1_err <= 1e-12 && ssim_err <= 1e-6 && std::abs(ps - 48.1308) <= 1e-3, d.str()};
}

}  // namespace

int main() {
    int failures = 0;
    auto report = [&](const char* name, const std::function<Outcome()>& check) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s %-22s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    };

    report("mass-conservation", mass_conservation);
    report("dam-break-exactness", dam_break_exactness);
    report("well-balanced", well_balanced);
    report("flux-consistency", flux_consistency);

    std::optional<BumpRuns> bump;
    try {
        const Scenario sc = make_scenario(ScenarioSpec{});
        Scenario tr = sc;
        tr.bathy = sc.bathy.transposed();
        tr.ic = sc.ic.transposed();
        bump = BumpRuns{run(sc), run(tr)};
    } catch (const std::exception& e) {
        std::printf("bump run failed: %s\n", e.what());
    }
    report("symmetry", [&] { return bump ? symmetry(*bump) : Outcome{false, "bump run failed"}; });
    report("determinism-format", determinism_and_format);
    report("pipeline-parity", [&] { return bump ? pipeline_parity(*bump) : Outcome{false, "bump run failed"}; });
    report("metrics-oracles", metrics_oracles);

    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

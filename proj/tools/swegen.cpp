#include "swegen/config.hpp"
#include "swegen/dataset.hpp"
#include "swegen/error.hpp"
#include "swegen/flux.hpp"
#include "swegen/manifest.hpp"
#include "swegen/metrics.hpp"
#include "swegen/render.hpp"
#include "swegen/solver.hpp"
#include "swegen/swt.hpp"
#include "swegen/verification.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <unistd.h>

using namespace swegen;
namespace fs = std::filesystem;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Shared run-configuration flags. Anything set here wins over --config.
struct RunFlags {
    std::optional<std::string> config_path;
    std::optional<std::string> family;
    std::optional<std::uint64_t> seed;
    std::optional<long long> grid;
    std::optional<std::string> flux;
    std::optional<double> cfl;
    std::optional<double> t_final;
    std::optional<long long> frames;
    std::optional<double> gravity;

    void add_to(CLI::App* cmd, bool with_family) {
        cmd->add_option("--config", config_path, "Scenario JSON file");
        if (with_family)
            cmd->add_option("--family", family, "random_terrain | planar_riverbed | gaussian_bump | dam_break");
        cmd->add_option("--seed", seed, "Scenario seed");
        cmd->add_option("--grid", grid, "Cells per side of the unit square");
        cmd->add_option("--flux", flux, "roe | rusanov | lax_friedrichs");
        cmd->add_option("--cfl", cfl, "CFL number");
        cmd->add_option("--t-final", t_final, "Simulated time in seconds");
        cmd->add_option("--frames", frames, "Number of stored frames");
        cmd->add_option("--gravity", gravity, "Gravitational acceleration");
    }

    ScenarioSpec resolve(ScenarioSpec spec) const {
        if (config_path)
            spec = spec_from_json(load_json_file(*config_path), spec);
        if (family) {
            const Family f = parse_family(*family);
            if (f != spec.family())
                spec.params = default_params(f);
        }
        if (seed)
            spec.seed = *seed;
        if (grid) {
            if (*grid < static_cast<long long>(GridSpec::kMinCells))
                throw std::invalid_argument("grid too small: nx and ny must be >= 4 (got " +
                                            std::to_string(*grid) + ")");
            spec.grid = GridSpec::unit_square(static_cast<std::size_t>(*grid));
        }
        if (flux)
            spec.config.flux_scheme = parse_flux_scheme(*flux);
        if (cfl)
            spec.config.cfl = *cfl;
        if (t_final)
            spec.config.t_final = *t_final;
        if (frames) {
            if (*frames < 2)
                throw std::invalid_argument("n_frames must be >= 2");
            spec.config.n_frames = static_cast<std::size_t>(*frames);
        }
        if (gravity)
            spec.config.gravity = *gravity;
        spec.config.validate();
        return spec;
    }
};

void emit(const Json& doc) { std::cout << doc.dump(2) << std::endl; }

Json summary_json(const RunSummary& s) {
    return {{"steps", s.steps},
            {"min_dt", s.min_dt},
            {"max_dt", s.max_dt},
            {"mass_initial", s.mass_initial},
            {"mass_final", s.mass_final},
            {"mass_drift", s.relative_mass_drift()},
            {"clamped_mass", s.clamped_mass}};
}

Json timing_json(Json fields) {
    fields["reproducible"] = false;
    return fields;
}

// JSON has no infinity; identical frames report "inf".
Json number_or_inf(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    return v;
}

ShadeParams load_style(const std::optional<std::string>& path) {
    return path ? style_from_json(load_json_file(*path)) : ShadeParams{};
}

// ---- simulate ----------------------------------------------------------

struct SimulateCmd {
    RunFlags flags;
    std::optional<std::string> out;
    bool serial = false;

    int run() const {
        const ScenarioSpec spec = flags.resolve(ScenarioSpec{});
        const auto t0 = Clock::now();
        const Scenario scenario = make_scenario(spec);
        const RunResult result = run_detailed(scenario, serial ? Execution::serial : Execution::parallel);
        const double sim_s = seconds_since(t0);

        const fs::path path = out ? fs::path(*out) : fs::path(scenario.id + ".swt");
        if (path.has_parent_path())
            fs::create_directories(path.parent_path());
        const auto t1 = Clock::now();
        const std::uint64_t checksum = write_trajectory(result.trajectory, path);
        const double write_s = seconds_since(t1);

        Json doc{{"command", "simulate"},
                 {"id", scenario.id},
                 {"resolved", to_json(spec)},
                 {"output", path.string()},
                 {"checksum", checksum_hex(checksum)},
                 {"frames", result.trajectory.frames.size()},
                 {"summary", summary_json(result.summary)},
                 {"timing", timing_json({{"sim_seconds", sim_s}, {"write_seconds", write_s}})}};
        emit(doc);
        return 0;
    }
};

// ---- dataset -----------------------------------------------------------

struct DatasetCmd {
    RunFlags flags;
    long long count = -1;
    std::string out;
    std::optional<long long> jobs;
    std::optional<std::string> style;
    bool no_render = false;

    int run() const {
        if (count < 1)
            throw std::invalid_argument("--count must be at least 1");
        DatasetRequest req;
        ScenarioSpec base;
        base.grid = GridSpec::unit_square(64);
        base.params = RandomTerrainParams{};
        RunFlags f = flags;
        const bool mixed = f.family && *f.family == "mixed";
        if (mixed)
            f.family.reset();
        const ScenarioSpec spec = f.resolve(base);

        req.count = static_cast<std::size_t>(count);
        req.seed = spec.seed;
        req.family = spec.family();
        req.mixed = mixed;
        req.grid = spec.grid;
        req.config = spec.config;
        req.out = out;
        req.render = !no_render;
        req.style = load_style(style);
        long long j = 1;
        if (jobs) {
            j = *jobs;
        } else if (const char* env = std::getenv("SWEGEN_JOBS")) {
            try {
                j = std::stoll(env);
            } catch (const std::exception&) {
                throw std::invalid_argument(std::string("SWEGEN_JOBS is not an integer: '") + env + "'");
            }
        }
        if (j < 1)
            throw std::invalid_argument("--jobs must be at least 1");
        req.jobs = static_cast<std::size_t>(j);

        const auto t0 = Clock::now();
        const DatasetResult result = generate_dataset(req);
        const double total_s = seconds_since(t0);

        Json failures = Json::array();
        for (const FailedSeed& fs_ : result.failures)
            failures.push_back({{"seed", fs_.seed}, {"error", fs_.message}});
        Json resolved{{"count", req.count},
                      {"seed", req.seed},
                      {"family", mixed ? std::string("mixed") : std::string(to_string(req.family))},
                      {"grid", to_json(req.grid)},
                      {"config", to_json(req.config)},
                      {"render", req.render},
                      {"style", to_json(req.style)},
                      {"out", req.out.string()}};
        Json doc{{"command", "dataset"},
                 {"resolved", resolved},
                 {"entries", result.manifest.entries.size()},
                 {"manifest", (req.out / kManifestName).string()},
                 {"manifest_checksum", checksum_hex(file_checksum(req.out / kManifestName))},
                 {"failed", failures},
                 {"timing", timing_json({{"jobs", req.jobs}, {"total_seconds", total_s}})}};
        emit(doc);
        if (!result.ok()) {
            std::cerr << "swegen: " << result.failures.size() << " scenario(s) failed, seeds:";
            for (const FailedSeed& fs_ : result.failures)
                std::cerr << ' ' << fs_.seed;
            std::cerr << '\n';
            return kExitRuntime;
        }
        return 0;
    }
};

// ---- verify ------------------------------------------------------------

struct VerifyCmd {
    std::string dir;

    int run() const {
        const VerifyReport report = verify_manifest(dir);
        Json issues = Json::array();
        for (const ManifestIssue& i : report.issues)
            issues.push_back({{"id", i.id}, {"path", i.path}, {"problem", i.problem}});
        emit({{"command", "verify"}, {"dir", dir}, {"checked", report.checked}, {"ok", report.ok()}, {"issues", issues}});
        return report.ok() ? 0 : kExitRuntime;
    }
};

// ---- render ------------------------------------------------------------

struct RenderCmd {
    std::string traj;
    std::string out;
    std::optional<std::string> style;

    int run() const {
        const ShadeParams s = load_style(style);
        const Trajectory t = read_trajectory(traj);
        const auto t0 = Clock::now();
        const auto paths = render_trajectory(t, s, out);
        const double render_s = seconds_since(t0);
        Json files = Json::array();
        for (const auto& p : paths)
            files.push_back(p.filename().string());
        std::size_t n = 0;
        const std::uint64_t sum = directory_checksum(out, &n);
        emit({{"command", "render"},
              {"resolved", {{"traj", traj}, {"out", out}, {"style", to_json(s)}}},
              {"frames", files},
              {"frames_checksum", checksum_hex(sum)},
              {"timing", timing_json({{"render_seconds", render_s}})}});
        return 0;
    }
};

// ---- evaluate ----------------------------------------------------------

struct EvaluateCmd {
    std::string pred;
    std::string ref;
    std::vector<std::string> frames;
    std::string format = "json";

    int run() const {
        if (!frames.empty() && frames.size() != 2)
            throw std::invalid_argument("--frames takes exactly two directories");
        const Trajectory p = read_trajectory(pred);
        const Trajectory r = read_trajectory(ref);
        const PhysicsError e = physics_l1(p, r);

        Json doc{{"command", "evaluate"},
                 {"resolved", {{"pred", pred}, {"ref", ref}, {"frames", frames}}},
                 {"physics",
                  {{"l1_h", e.l1_h},
                   {"l1_hu", e.l1_hu},
                   {"l1_hv", e.l1_hv},
                   {"l1_mean", e.l1_mean},
                   {"accuracy_pct", e.accuracy_pct}}}};

        if (!frames.empty()) {
            const auto a = list_frames(frames[0]);
            const auto b = list_frames(frames[1]);
            if (a.size() != b.size())
                throw std::invalid_argument("frame directories hold different numbers of frames");
            Json per = Json::array();
            double psnr_sum = 0.0, ssim_sum = 0.0;
            for (std::size_t k = 0; k < a.size(); ++k) {
                const RgbFrame fa = read_ppm(a[k]);
                const RgbFrame fb = read_ppm(b[k]);
                const double ps = psnr(fa, fb);
                const double ss = ssim(fa, fb);
                psnr_sum += ps;
                ssim_sum += ss;
                per.push_back({{"frame", a[k].filename().string()}, {"psnr", number_or_inf(ps)}, {"ssim", ss}});
            }
            const double n = static_cast<double>(a.size());
            doc["video"] = {{"per_frame", per},
                            {"mean_psnr", a.empty() ? Json(nullptr) : number_or_inf(psnr_sum / n)},
                            {"mean_ssim", a.empty() ? Json(nullptr) : Json(ssim_sum / n)}};
        }

        const GridSpec& g = r.grid();
        const std::string res = std::to_string(g.nx()) + "x" + std::to_string(g.ny());
        doc["table"] = {{"columns", {"Resolution", "Sim.", "Render", "Total", "Accuracy (%)"}},
                        {"row", {{"Resolution", res}, {"Sim.", nullptr}, {"Render", nullptr}, {"Total", nullptr},
                                 {"Accuracy (%)", e.accuracy_pct}}}};
        if (format == "text") {
            TimingRow row{res, "evaluated", 0.0, 0.0, e.accuracy_pct};
            std::cout << format_timing_table({row});
        } else {
            emit(doc);
        }
        return 0;
    }
};

// ---- riemann -----------------------------------------------------------

struct RiemannCmd {
    double hl = 1.0;
    double hr = 0.1;
    double t = 0.1;
    long long cells = 128;
    long long levels = 3;
    std::string flux = "roe";
    std::string format = "json";

    int run() const {
        if (!(hl > hr) || !(hr >= 0.0))
            throw std::invalid_argument("dam break requires hl > hr >= 0");
        if (cells < 8)
            throw std::invalid_argument("--cells must be at least 8");
        if (levels < 2)
            throw std::invalid_argument("--levels must be at least 2");
        DamBreakStrip setup;
        setup.h_left = hl;
        setup.h_right = hr;
        setup.t = t;
        setup.cells = static_cast<std::size_t>(cells);
        setup.config.flux_scheme = parse_flux_scheme(flux);
        const DamBreakSolution exact(hl, hr, setup.config.gravity);

        const auto t0 = Clock::now();
        const auto errors = dam_break_convergence(setup, static_cast<std::size_t>(levels));
        const double total_s = seconds_since(t0);
        const auto orders = observed_orders(errors);
        bool decreasing = true;
        for (std::size_t k = 1; k < errors.size(); ++k)
            decreasing = decreasing && errors[k].l1_h < errors[k - 1].l1_h;

        if (format == "text") {
            std::printf("dam break hl=%g hr=%g t=%g flux=%s domain=%g m\n", hl, hr, t, flux.c_str(),
                        setup.domain_length());
            std::printf("%8s | %14s | %8s\n", "cells", "L1(h)", "order");
            for (std::size_t k = 0; k < errors.size(); ++k) {
                if (k == 0)
                    std::printf("%8zu | %14.6e | %8s\n", errors[k].cells, errors[k].l1_h, "-");
                else
                    std::printf("%8zu | %14.6e | %8.4f\n", errors[k].cells, errors[k].l1_h, orders[k - 1]);
            }
            std::printf("strictly decreasing: %s\n", decreasing ? "yes" : "no");
            return 0;
        }
        Json rows = Json::array();
        for (std::size_t k = 0; k < errors.size(); ++k)
            rows.push_back({{"cells", errors[k].cells},
                            {"l1_h", errors[k].l1_h},
                            {"order", k == 0 ? Json(nullptr) : Json(orders[k - 1])}});
        emit({{"command", "riemann"},
              {"resolved",
               {{"hl", hl}, {"hr", hr}, {"t", t}, {"cells", cells}, {"levels", levels}, {"flux", flux},
                {"domain_length", setup.domain_length()}, {"config", to_json(setup.config)}}},
              {"exact", {{"h_middle", exact.h_middle()}, {"u_middle", exact.u_middle()}, {"front_speed", exact.front_speed()}}},
              {"levels", rows},
              {"strictly_decreasing", decreasing},
              {"timing", timing_json({{"total_seconds", total_s}})}});
        return 0;
    }
};

// ---- timing ------------------------------------------------------------

struct TimingCmd {
    RunFlags flags;
    std::vector<long long> grids{128};
    std::optional<std::string> out;
    std::string format = "text";

    int run() const {
        ScenarioSpec base;
        const ScenarioSpec spec = flags.resolve(base);
        const fs::path root = out ? fs::path(*out)
                                  : fs::temp_directory_path() / ("swegen-timing-" + std::to_string(::getpid()));
        std::vector<TimingRow> rows = reference_classical_timings();
        Json measured = Json::array();
        for (long long n : grids) {
            if (n < static_cast<long long>(GridSpec::kMinCells))
                throw std::invalid_argument("grid too small: nx and ny must be >= 4");
            ScenarioSpec s = spec;
            s.grid = GridSpec::unit_square(static_cast<std::size_t>(n));
            const auto t0 = Clock::now();
            const Trajectory traj = swegen::run(make_scenario(s));
            const double sim_s = seconds_since(t0);
            const auto t1 = Clock::now();
            render_trajectory(traj, ShadeParams{}, root / std::to_string(n));
            const double render_s = seconds_since(t1);
            const std::string res = std::to_string(n) + "x" + std::to_string(n);
            rows.push_back({res, "swegen (this run)", sim_s, render_s, -1.0});
            measured.push_back({{"Resolution", res}, {"Sim.", sim_s}, {"Render", render_s}, {"Total", sim_s + render_s}});
        }
        if (!out)
            fs::remove_all(root);

        if (format == "text") {
            std::cout << format_timing_table(rows);
            return 0;
        }
        Json reference = Json::array();
        for (const TimingRow& r : reference_classical_timings())
            reference.push_back({{"Resolution", r.resolution}, {"Sim.", r.sim_seconds}, {"Render", r.render_seconds},
                                 {"Total", r.total_seconds()}});
        emit({{"command", "timing"},
              {"resolved", to_json(spec)},
              {"columns", {"Resolution", "Sim.", "Render", "Total", "Accuracy (%)"}},
              {"reference_classical", reference},
              {"timing", timing_json({{"measured", measured}})}});
        return 0;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swegen: shallow-water simulation and dataset toolkit"};
    app.require_subcommand(1);

    SimulateCmd simulate;
    auto* c_sim = app.add_subcommand("simulate", "Run one scenario and write a .swt trajectory");
    simulate.flags.add_to(c_sim, true);
    c_sim->add_option("--out", simulate.out, "Output .swt path (default <id>.swt)");
    c_sim->add_flag("--serial", simulate.serial, "Use the serial reference kernels");

    DatasetCmd dataset;
    auto* c_ds = app.add_subcommand("dataset", "Generate seeds S..S+N-1 with a manifest");
    dataset.flags.add_to(c_ds, true);
    c_ds->add_option("--count", dataset.count, "Number of scenarios")->required();
    c_ds->add_option("--out", dataset.out, "Output directory")->required();
    c_ds->add_option("--jobs", dataset.jobs, "Worker threads (default $SWEGEN_JOBS or 1)");
    c_ds->add_option("--style", dataset.style, "Renderer style JSON");
    c_ds->add_flag("--no-render", dataset.no_render, "Skip PPM frames");

    VerifyCmd verify;
    auto* c_ver = app.add_subcommand("verify", "Recompute every checksum listed in a manifest");
    c_ver->add_option("dir", verify.dir, "Dataset directory")->required();

    RenderCmd render;
    auto* c_ren = app.add_subcommand("render", "Shade a trajectory into PPM frames");
    c_ren->add_option("--traj", render.traj, "Input .swt")->required();
    c_ren->add_option("--out", render.out, "Output directory")->required();
    c_ren->add_option("--style", render.style, "Renderer style JSON");

    EvaluateCmd evaluate;
    auto* c_ev = app.add_subcommand("evaluate", "Compare a predicted trajectory against a reference");
    c_ev->add_option("--pred", evaluate.pred, "Predicted .swt")->required();
    c_ev->add_option("--ref", evaluate.ref, "Reference .swt")->required();
    c_ev->add_option("--frames", evaluate.frames, "Two frame directories: predicted and reference")->expected(2);
    c_ev->add_option("--format", evaluate.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    RiemannCmd riemann;
    auto* c_rm = app.add_subcommand("riemann", "1D dam-break convergence against the exact solution");
    c_rm->add_option("--hl", riemann.hl, "Upstream depth");
    c_rm->add_option("--hr", riemann.hr, "Downstream depth");
    c_rm->add_option("--t", riemann.t, "Time");
    c_rm->add_option("--cells", riemann.cells, "Coarsest cell count");
    c_rm->add_option("--levels", riemann.levels, "Number of grids (each doubles)");
    c_rm->add_option("--flux", riemann.flux, "roe | rusanov | lax_friedrichs");
    c_rm->add_option("--format", riemann.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    TimingCmd timing;
    auto* c_tm = app.add_subcommand("timing", "Time simulate and render per grid next to the classical reference");
    timing.flags.add_to(c_tm, true);
    c_tm->add_option("--grids", timing.grids, "Grid sizes")->delimiter(',');
    c_tm->add_option("--out", timing.out, "Keep rendered frames here");
    c_tm->add_option("--format", timing.format, "json | text")->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (c_sim->parsed()) return simulate.run();
        if (c_ds->parsed()) return dataset.run();
        if (c_ver->parsed()) return verify.run();
        if (c_ren->parsed()) return render.run();
        if (c_ev->parsed()) return evaluate.run();
        if (c_rm->parsed()) return riemann.run();
        if (c_tm->parsed()) return timing.run();
    } catch (const std::invalid_argument& e) {
        std::cerr << "swegen: " << e.what() << '\n';
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "swegen: bad JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "swegen: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

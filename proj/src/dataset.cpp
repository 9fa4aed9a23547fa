#include "swegen/dataset.hpp"

#include "swegen/solver.hpp"
#include "swegen/swt.hpp"

#include <omp.h>

#include <atomic>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <thread>

namespace swegen {

namespace fs = std::filesystem;

namespace {

ChannelStats channel_stats(const Trajectory& traj, std::span<const double> (ConservedField::*plane)() const noexcept) {
    double n = 0.0, mean = 0.0, m2 = 0.0;
    for (const ConservedField& q : traj.frames)
        for (double x : (q.*plane)()) {
            n += 1.0;
            const double d = x - mean;
            mean += d / n;
            m2 += d * (x - mean);
        }
    return {mean, n > 0.0 ? std::sqrt(m2 / n) : 0.0};
}

Family dataset_family(const DatasetRequest& req, std::uint64_t seed) {
    return req.mixed ? static_cast<Family>(seed % 4) : req.family;
}

ManifestEntry produce(const DatasetRequest& req, std::uint64_t seed) {
    const Scenario scenario = make_scenario(sampled_spec(dataset_family(req, seed), seed, req.grid, req.config));
    const Trajectory traj = run(scenario);

    ManifestEntry e;
    e.id = scenario.id;
    e.seed = seed;
    e.family = scenario.family();
    e.grid = scenario.grid();
    e.swt = "trajectories/" + e.id + ".swt";
    e.checksum = write_trajectory(traj, req.out / e.swt);
    if (req.render) {
        e.frames = "frames/" + e.id;
        const fs::path dir = req.out / e.frames;
        fs::remove_all(dir);
        render_trajectory(traj, req.style, dir);
        e.frames_checksum = directory_checksum(dir, &e.frame_count);
    }
    e.stats = trajectory_stats(traj);
    return e;
}

}  // namespace

PhysicsStats trajectory_stats(const Trajectory& traj) {
    PhysicsStats s;
    s.h = channel_stats(traj, &ConservedField::h);
    s.hu = channel_stats(traj, &ConservedField::hu);
    s.hv = channel_stats(traj, &ConservedField::hv);
    s.samples = traj.frames.empty() ? 0 : traj.frames.size() * traj.grid().cells();
    return s;
}

DatasetResult generate_dataset(const DatasetRequest& req) {
    if (req.count == 0)
        throw std::invalid_argument("dataset count must be at least 1");
    if (req.jobs == 0)
        throw std::invalid_argument("jobs must be at least 1");
    if (req.out.empty())
        throw std::invalid_argument("dataset output directory is required");
    req.config.validate();
    req.style.validate();
    fs::create_directories(req.out / "trajectories");

    std::vector<std::optional<ManifestEntry>> entries(req.count);
    std::vector<std::string> errors(req.count);
    std::atomic<std::size_t> next{0};

    auto worker = [&](bool single_threaded_kernels) {
        if (single_threaded_kernels)
            omp_set_num_threads(1);
        for (std::size_t k = next++; k < req.count; k = next++) {
            try {
                entries[k] = produce(req, req.seed + k);
            } catch (const std::exception& ex) {
                errors[k] = ex.what();
            }
        }
    };

    const std::size_t jobs = std::min(req.jobs, req.count);
    if (jobs == 1) {
        worker(false);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < jobs; ++t)
            pool.emplace_back(worker, true);
    }

    DatasetResult result;
    for (std::size_t k = 0; k < req.count; ++k) {
        if (entries[k])
            result.manifest.entries.push_back(std::move(*entries[k]));
        else
            result.failures.push_back({req.seed + k, errors[k]});
    }
    write_manifest(req.out, result.manifest);
    return result;
}

}  // namespace swegen

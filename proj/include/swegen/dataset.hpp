#pragma once

#include "swegen/manifest.hpp"
#include "swegen/render.hpp"
#include "swegen/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace swegen {

/// Mean and population standard deviation of h, hu, hv over every cell of
/// every frame.
PhysicsStats trajectory_stats(const Trajectory& traj);

struct DatasetRequest {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    Family family = Family::random_terrain;
    bool mixed = false;  // family = seed mod 4 instead of `family`
    GridSpec grid = GridSpec::unit_square(64);
    SimConfig config{};
    std::filesystem::path out;
    std::size_t jobs = 1;
    bool render = true;
    ShadeParams style{};
};

struct FailedSeed {
    std::uint64_t seed = 0;
    std::string message;
};

struct DatasetResult {
    DatasetManifest manifest;
    std::vector<FailedSeed> failures;  // ordered by seed

    bool ok() const noexcept { return failures.empty(); }
};

/// Seeds seed .. seed+count-1, one scenario each, spread over `jobs` worker
/// threads. Layout under `out`:
///   trajectories/<id>.swt and <id>.json
///   frames/<id>/frame_XXXX.ppm   (when render is set)
///   manifest.json                (successful entries, ordered by seed)
/// Output bytes do not depend on `jobs`. Throws std::invalid_argument when
/// count is zero or jobs is zero.
DatasetResult generate_dataset(const DatasetRequest& request);

}  // namespace swegen

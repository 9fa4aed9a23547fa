#pragma once

#include "swegen/grid.hpp"
#include "swegen/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace swegen {

/// Per-variable statistics over every cell and frame of a trajectory.
struct ChannelStats {
    double mean = 0.0;
    double std = 0.0;
};

struct PhysicsStats {
    ChannelStats h, hu, hv;
    std::uint64_t samples = 0;
};

struct ManifestEntry {
    std::string id;
    std::uint64_t seed = 0;
    Family family = Family::random_terrain;
    GridSpec grid = GridSpec::unit_square(4);
    std::string swt;                       // relative to the dataset root
    std::uint64_t checksum = 0;            // FNV-1a of the .swt bytes
    std::string frames;                    // relative frame directory, empty if not rendered
    std::size_t frame_count = 0;
    std::uint64_t frames_checksum = 0;     // FNV-1a over frame files in name order
    PhysicsStats stats;
};

/// manifest.json at the dataset root. Entries are kept ordered by seed.
struct DatasetManifest {
    std::vector<ManifestEntry> entries;
    /// Pooled statistics over all entries, used to standardise physics
    /// channels for training.
    PhysicsStats pooled_stats() const;
};

inline constexpr const char* kManifestName = "manifest.json";

void write_manifest(const std::filesystem::path& dir, const DatasetManifest& manifest);
DatasetManifest read_manifest(const std::filesystem::path& dir);

struct ManifestIssue {
    std::string id;
    std::string path;
    std::string problem;
};

struct VerifyReport {
    std::size_t checked = 0;
    std::vector<ManifestIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
};

/// Recompute every checksum; collects all problems instead of stopping at the
/// first.
VerifyReport verify_manifest(const std::filesystem::path& dir);

/// FNV-1a over the concatenated bytes of `dir`'s regular files sorted by name.
std::uint64_t directory_checksum(const std::filesystem::path& dir, std::size_t* file_count = nullptr);

}  // namespace swegen

#include "swegen/manifest.hpp"

#include "swegen/config.hpp"
#include "swegen/swt.hpp"

#include <algorithm>
#include <cmath>

namespace swegen {

namespace fs = std::filesystem;

namespace {

Json stats_json(const PhysicsStats& s) {
    auto channel = [](const ChannelStats& c) { return Json{{"mean", c.mean}, {"std", c.std}}; };
    return {{"h", channel(s.h)}, {"hu", channel(s.hu)}, {"hv", channel(s.hv)}, {"samples", s.samples}};
}

PhysicsStats stats_from_json(const Json& j) {
    auto channel = [](const Json& c) {
        return ChannelStats{c.at("mean").get<double>(), c.at("std").get<double>()};
    };
    return {channel(j.at("h")), channel(j.at("hu")), channel(j.at("hv")), j.at("samples").get<std::uint64_t>()};
}

ChannelStats pool(const std::vector<ManifestEntry>& entries, ChannelStats PhysicsStats::*member) {
    double n = 0.0, mean = 0.0, m2 = 0.0;
    for (const ManifestEntry& e : entries) {
        const double k = static_cast<double>(e.stats.samples);
        if (k == 0.0)
            continue;
        const ChannelStats& c = e.stats.*member;
        // Chan et al. pairwise combination of (count, mean, M2).
        const double delta = c.mean - mean;
        const double total = n + k;
        mean += delta * k / total;
        m2 += c.std * c.std * k + delta * delta * n * k / total;
        n = total;
    }
    return {mean, n > 0.0 ? std::sqrt(m2 / n) : 0.0};
}

}  // namespace

PhysicsStats DatasetManifest::pooled_stats() const {
    PhysicsStats out;
    out.h = pool(entries, &PhysicsStats::h);
    out.hu = pool(entries, &PhysicsStats::hu);
    out.hv = pool(entries, &PhysicsStats::hv);
    for (const ManifestEntry& e : entries)
        out.samples += e.stats.samples;
    return out;
}

void write_manifest(const fs::path& dir, const DatasetManifest& manifest) {
    Json entries = Json::array();
    for (const ManifestEntry& e : manifest.entries) {
        entries.push_back({{"id", e.id},
                           {"seed", e.seed},
                           {"family", to_string(e.family)},
                           {"grid", to_json(e.grid)},
                           {"swt", e.swt},
                           {"checksum", checksum_hex(e.checksum)},
                           {"frames", e.frames},
                           {"frame_count", e.frame_count},
                           {"frames_checksum", checksum_hex(e.frames_checksum)},
                           {"stats", stats_json(e.stats)}});
    }
    Json doc{{"format", "swegen-manifest"},
             {"version", 1},
             {"entries", std::move(entries)},
             {"normalization", stats_json(manifest.pooled_stats())}};
    const std::string text = doc.dump(2) + "\n";
    fs::create_directories(dir);
    write_file_bytes(dir / kManifestName,
                     std::span(reinterpret_cast<const std::byte*>(text.data()), text.size()));
}

DatasetManifest read_manifest(const fs::path& dir) {
    const Json doc = load_json_file((dir / kManifestName).string());
    DatasetManifest out;
    try {
        for (const Json& j : doc.at("entries")) {
            ManifestEntry e;
            e.id = j.at("id").get<std::string>();
            e.seed = j.at("seed").get<std::uint64_t>();
            e.family = parse_family(j.at("family").get<std::string>());
            e.grid = grid_from_json(j.at("grid"));
            e.swt = j.at("swt").get<std::string>();
            e.checksum = parse_checksum_hex(j.at("checksum").get<std::string>());
            e.frames = j.value("frames", std::string());
            e.frame_count = j.value("frame_count", std::size_t{0});
            if (j.contains("frames_checksum"))
                e.frames_checksum = parse_checksum_hex(j.at("frames_checksum").get<std::string>());
            if (j.contains("stats"))
                e.stats = stats_from_json(j.at("stats"));
            out.entries.push_back(std::move(e));
        }
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("malformed manifest in '" + dir.string() + "': " + e.what());
    }
    return out;
}

std::uint64_t directory_checksum(const fs::path& dir, std::size_t* file_count) {
    std::vector<fs::path> files;
    for (const auto& item : fs::directory_iterator(dir))
        if (item.is_regular_file())
            files.push_back(item.path());
    std::sort(files.begin(), files.end());
    std::vector<std::byte> all;
    for (const fs::path& f : files) {
        const auto bytes = read_file_bytes(f);
        all.insert(all.end(), bytes.begin(), bytes.end());
    }
    if (file_count)
        *file_count = files.size();
    return fnv1a64(all);
}

VerifyReport verify_manifest(const fs::path& dir) {
    VerifyReport report;
    const DatasetManifest manifest = read_manifest(dir);
    for (const ManifestEntry& e : manifest.entries) {
        ++report.checked;
        const fs::path swt = dir / e.swt;
        if (!fs::exists(swt)) {
            report.issues.push_back({e.id, e.swt, "missing file"});
        } else if (file_checksum(swt) != e.checksum) {
            report.issues.push_back({e.id, e.swt, "checksum mismatch"});
        }
        if (e.frames.empty())
            continue;
        const fs::path frames = dir / e.frames;
        if (!fs::is_directory(frames)) {
            report.issues.push_back({e.id, e.frames, "missing frame directory"});
            continue;
        }
        std::size_t count = 0;
        const std::uint64_t sum = directory_checksum(frames, &count);
        if (count != e.frame_count)
            report.issues.push_back({e.id, e.frames, "frame count mismatch"});
        else if (sum != e.frames_checksum)
            report.issues.push_back({e.id, e.frames, "checksum mismatch"});
    }
    return report;
}

}  // namespace swegen

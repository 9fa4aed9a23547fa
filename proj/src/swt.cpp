#include "swegen/swt.hpp"

#include "swegen/config.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <limits>

namespace swegen {

namespace fs = std::filesystem;

namespace {

class Writer {
public:
    explicit Writer(std::size_t reserve) { bytes_.reserve(reserve); }

    template <class T>
    void put(T value) {
        using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                     std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                        std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
        U bits = std::bit_cast<U>(value);
        for (std::size_t b = 0; b < sizeof(U); ++b)
            bytes_.push_back(static_cast<std::byte>((bits >> (8 * b)) & 0xFF));
    }

    void put_plane(std::span<const double> plane) {
        for (double v : plane)
            put(v);
    }

    std::vector<std::byte> take() { return std::move(bytes_); }

private:
    std::vector<std::byte> bytes_;
};

class Reader {
public:
    explicit Reader(std::span<const std::byte> bytes) : bytes_(bytes) {}

    template <class T>
    T get() {
        using U = std::conditional_t<sizeof(T) == 8, std::uint64_t,
                                     std::conditional_t<sizeof(T) == 4, std::uint32_t,
                                                        std::conditional_t<sizeof(T) == 2, std::uint16_t, std::uint8_t>>>;
        if (pos_ + sizeof(U) > bytes_.size())
            throw FormatError(FormatErrorKind::unexpected_end, "swt: unexpected end of file");
        U bits = 0;
        for (std::size_t b = 0; b < sizeof(U); ++b)
            bits |= static_cast<U>(static_cast<U>(bytes_[pos_ + b]) << (8 * b));
        pos_ += sizeof(U);
        return std::bit_cast<T>(bits);
    }

    /// Reads one plane; `what` names it in error messages.
    std::vector<double> plane(std::size_t n, const std::string& what) {
        std::vector<double> out(n);
        for (std::size_t c = 0; c < n; ++c) {
            out[c] = get<double>();
            if (!std::isfinite(out[c]))
                throw FormatError(FormatErrorKind::non_finite_payload,
                                  "swt: non-finite payload in " + what + " at cell " + std::to_string(c));
        }
        return out;
    }

private:
    std::span<const std::byte> bytes_;
    std::size_t pos_ = 0;
};

struct Header {
    std::size_t nx, ny, n_frames;
    double dx, dy;
    FluxScheme flux;
    Family family;
};

Header parse_header(Reader& r, std::size_t total_bytes) {
    if (total_bytes < kSwtHeaderBytes)
        throw FormatError(FormatErrorKind::unexpected_end, "swt: unexpected end of file in header");
    char magic[4];
    for (char& m : magic)
        m = static_cast<char>(r.get<std::uint8_t>());
    if (std::memcmp(magic, "SWT1", 4) != 0)
        throw FormatError(FormatErrorKind::bad_magic, "swt: bad magic");
    const auto version = r.get<std::uint16_t>();
    if (version != kSwtVersion)
        throw FormatError(FormatErrorKind::version_mismatch,
                          "swt: version mismatch (file " + std::to_string(version) + ", reader " +
                              std::to_string(kSwtVersion) + ")");
    if (r.get<std::uint16_t>() != kSwtEndianMarker)
        throw FormatError(FormatErrorKind::bad_endianness, "swt: bad endianness marker");

    Header h{};
    h.nx = r.get<std::uint32_t>();
    h.ny = r.get<std::uint32_t>();
    h.n_frames = r.get<std::uint32_t>();
    h.dx = r.get<double>();
    h.dy = r.get<double>();
    const auto flux = r.get<std::uint8_t>();
    const auto family = r.get<std::uint8_t>();
    const auto reserved = r.get<std::uint16_t>();
    if (h.nx < GridSpec::kMinCells || h.ny < GridSpec::kMinCells || h.n_frames < 2 ||
        !(std::isfinite(h.dx) && h.dx > 0.0) || !(std::isfinite(h.dy) && h.dy > 0.0) || flux > 2 ||
        family > 3 || reserved != 0)
        throw FormatError(FormatErrorKind::invalid_header, "swt: invalid header field");
    h.flux = static_cast<FluxScheme>(flux);
    h.family = static_cast<Family>(family);

    const std::size_t expected = swt_file_size(h.nx, h.ny, h.n_frames);
    if (total_bytes < expected)
        throw FormatError(FormatErrorKind::unexpected_end,
                          "swt: unexpected end of file (" + std::to_string(total_bytes) + " of " +
                              std::to_string(expected) + " bytes)");
    if (total_bytes > expected)
        throw FormatError(FormatErrorKind::size_mismatch,
                          "swt: size mismatch (" + std::to_string(total_bytes) + " bytes, header implies " +
                              std::to_string(expected) + ")");
    return h;
}

}  // namespace

std::uint64_t fnv1a64(std::span<const std::byte> bytes) noexcept {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (std::byte b : bytes) {
        hash ^= static_cast<std::uint64_t>(b);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::size_t swt_file_size(std::size_t nx, std::size_t ny, std::size_t n_frames) {
    constexpr std::size_t max = std::numeric_limits<std::size_t>::max();
    const std::size_t cells = nx * ny;
    if (nx != 0 && cells / nx != ny)
        return max;
    const std::size_t planes = 1 + 3 * n_frames;
    if (cells != 0 && planes > max / 8 / cells)
        return max;
    return kSwtHeaderBytes + 8 * cells * planes;
}

std::vector<std::byte> encode_swt(const Trajectory& traj) {
    const GridSpec& grid = traj.grid();
    if (traj.frames.size() != traj.config.n_frames || traj.frames.size() < 2)
        throw std::invalid_argument("trajectory frame count does not match its config");
    if (grid.nx() > std::numeric_limits<std::uint32_t>::max() ||
        grid.ny() > std::numeric_limits<std::uint32_t>::max())
        throw std::invalid_argument("grid too large for the swt format");
    for (const ConservedField& f : traj.frames)
        if (!(f.grid() == grid))
            throw std::invalid_argument("trajectory frames do not share one grid");

    Writer w(swt_file_size(grid.nx(), grid.ny(), traj.frames.size()));
    for (char m : {'S', 'W', 'T', '1'})
        w.put(static_cast<std::uint8_t>(m));
    w.put(kSwtVersion);
    w.put(kSwtEndianMarker);
    w.put(static_cast<std::uint32_t>(grid.nx()));
    w.put(static_cast<std::uint32_t>(grid.ny()));
    w.put(static_cast<std::uint32_t>(traj.frames.size()));
    w.put(grid.dx());
    w.put(grid.dy());
    w.put(static_cast<std::uint8_t>(traj.config.flux_scheme));
    w.put(static_cast<std::uint8_t>(traj.family()));
    w.put(std::uint16_t{0});
    w.put_plane(traj.bathy.s());
    for (const ConservedField& f : traj.frames) {
        w.put_plane(f.h());
        w.put_plane(f.hu());
        w.put_plane(f.hv());
    }
    return w.take();
}

Trajectory decode_swt(std::span<const std::byte> bytes) {
    Reader r(bytes);
    const Header h = parse_header(r, bytes.size());
    const GridSpec grid(h.nx, h.ny, h.dx, h.dy);
    const std::size_t n = grid.cells();

    SimConfig config;
    config.flux_scheme = h.flux;
    config.n_frames = h.n_frames;
    Bathymetry bathy(grid, r.plane(n, "bathymetry"));

    std::vector<ConservedField> frames;
    frames.reserve(h.n_frames);
    for (std::size_t f = 0; f < h.n_frames; ++f) {
        const std::string tag = "frame " + std::to_string(f);
        auto depth = r.plane(n, tag + " h");
        auto mu = r.plane(n, tag + " hu");
        auto mv = r.plane(n, tag + " hv");
        for (std::size_t c = 0; c < n; ++c)
            if (depth[c] < 0.0)
                throw FormatError(FormatErrorKind::invalid_payload,
                                  "swt: negative depth in " + tag + " at cell " + std::to_string(c));
        frames.emplace_back(grid, std::move(depth), std::move(mu), std::move(mv));
    }
    return Trajectory{"", 0, default_params(h.family), config, std::move(bathy), std::move(frames)};
}

fs::path sidecar_path(const fs::path& swt_path) {
    fs::path p = swt_path;
    p.replace_extension(".json");
    return p;
}

std::vector<std::byte> read_file_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "' for reading");
    in.seekg(0, std::ios::end);
    const auto size = static_cast<std::size_t>(in.tellg());
    in.seekg(0, std::ios::beg);
    std::vector<std::byte> bytes(size);
    if (size > 0 && !in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(size)))
        throw IoError("failed reading '" + path.string() + "'");
    return bytes;
}

void write_file_bytes(const fs::path& path, std::span<const std::byte> bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

std::uint64_t file_checksum(const fs::path& path) { return fnv1a64(read_file_bytes(path)); }

std::uint64_t write_trajectory(const Trajectory& traj, const fs::path& path) {
    const std::vector<std::byte> bytes = encode_swt(traj);
    write_file_bytes(path, bytes);

    ScenarioSpec spec{traj.seed, traj.params, traj.grid(), traj.config};
    Json side;
    side["id"] = traj.scenario_id;
    const Json body = to_json(spec);
    for (const auto& item : body.items())
        side[item.key()] = item.value();
    const std::string text = side.dump(2) + "\n";
    write_file_bytes(sidecar_path(path),
                     std::span(reinterpret_cast<const std::byte*>(text.data()), text.size()));
    return fnv1a64(bytes);
}

Trajectory read_trajectory(const fs::path& path) {
    Trajectory traj = decode_swt(read_file_bytes(path));
    traj.scenario_id = path.stem().string();

    const fs::path side = sidecar_path(path);
    if (!fs::exists(side))
        return traj;

    const Json j = load_json_file(side.string());
    ScenarioSpec base{0, traj.params, traj.grid(), traj.config};
    ScenarioSpec spec;
    try {
        spec = spec_from_json(j, base);
    } catch (const std::invalid_argument& e) {
        throw FormatError(FormatErrorKind::sidecar_mismatch,
                          "swt sidecar '" + side.string() + "' is invalid: " + e.what());
    }
    if (!(spec.grid == traj.grid()) || spec.family() != traj.family() ||
        spec.config.flux_scheme != traj.config.flux_scheme ||
        spec.config.n_frames != traj.config.n_frames)
        throw FormatError(FormatErrorKind::sidecar_mismatch,
                          "swt sidecar '" + side.string() + "' disagrees with the file header");
    traj.seed = spec.seed;
    traj.params = spec.params;
    traj.config = spec.config;
    if (j.contains("id") && j.at("id").is_string())
        traj.scenario_id = j.at("id").get<std::string>();
    return traj;
}

}  // namespace swegen
